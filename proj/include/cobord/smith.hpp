#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cobord/int_matrix.hpp"

namespace cobord {

/// U * source * V = d with U, V unimodular and d diagonal, d_1 | d_2 | ...
/// The inverses of U and V are tracked alongside so callers never invert.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;
  IntMatrix source;
  std::size_t rank = 0;

  /// Nonzero diagonal entries, all positive.
  std::vector<Integer> invariants() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Saturated, LLL-reduced basis (as columns) of ker(m).
IntMatrix kernel_basis(const IntMatrix& m);

/// LLL-reduced basis (delta = 3/4) of the lattice spanned by the linearly
/// independent columns of b.
IntMatrix lll_reduce_columns(const IntMatrix& b);

/// Basis of {x | kx in span(columns of a_basis), k != 0}.
IntMatrix saturation(const IntMatrix& a_basis, std::size_t ambient_rank);

/// True if the column span of `a` is a direct summand of Z^rows.
bool is_saturated(const IntMatrix& a);

/// Solves a * x = b over Z. Returns false if no integral solution exists.
bool solve_integral(const IntMatrix& a, const IntMatrix& b, IntMatrix* x);

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each > 1, each dividing the next

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
  /// "0", "Z", "Z^2 + Z/2 + Z/6".
  std::string to_string() const;
};

/// ker(d_out) / im(d_in) where d_in: C_{r+1} -> C_r and d_out: C_r -> C_{r-1}.
AbelianGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

/// Z^rows / im(m).
AbelianGroup cokernel(const IntMatrix& m);

/// Z^generators modulo the column span of relations.
struct Presentation {
  std::size_t generators = 0;
  IntMatrix relations;  // generators x (number of relations)

  static Presentation free(std::size_t n) { return {n, IntMatrix(n, 0)}; }
  AbelianGroup group() const;
};

std::size_t torsion_free_part(const AbelianGroup& g);

/// Matrix of F(f): F(A) -> F(B), where F(X) = X / torsion, in the bases
/// fixed by the Smith decompositions of the two relation matrices.
/// f is a generators(B) x generators(A) matrix that must carry relations of A
/// into the relation lattice of B.
IntMatrix induced_tf_map(const IntMatrix& f, const Presentation& a,
                         const Presentation& b);

}  // namespace cobord
