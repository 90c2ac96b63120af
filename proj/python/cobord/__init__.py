"""Exact invariants of chain complexes, forms and Seifert matrices."""

from ._cobord import (
    DimensionError,
    FormError,
    ParseError,
    alexander,
    form_inertia,
    kernel_basis,
    lt_invariants,
    mk_check,
    parse_seifert,
    run_suite,
    smith_invariants,
    suite_names,
    wall_signature,
)

__all__ = [
    "DimensionError",
    "FormError",
    "ParseError",
    "alexander",
    "form_inertia",
    "kernel_basis",
    "lt_invariants",
    "mk_check",
    "parse_seifert",
    "run_suite",
    "smith_invariants",
    "suite_names",
    "wall_signature",
]
