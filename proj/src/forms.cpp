#include "cobord/forms.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cobord/errors.hpp"
#include "cobord/smith.hpp"

namespace cobord {
namespace {

using RatRows = std::vector<std::vector<Rational>>;

RatRows to_rational(const IntMatrix& m) {
  RatRows out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rational(m(i, j));
  return out;
}

std::string shape(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw DimensionError(std::string(what) + " must be square, got " + shape(m));
  }
}

}  // namespace

EpsSymmetricForm::EpsSymmetricForm(int epsilon, IntMatrix gram)
    : epsilon_(epsilon), gram_(std::move(gram)) {
  if (epsilon_ != 1 && epsilon_ != -1) {
    throw FormError(FormError::Kind::kNotSymmetric, "epsilon must be +1 or -1");
  }
  require_square(gram_, "gram matrix");
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    for (std::size_t j = 0; j < gram_.cols(); ++j) {
      if (gram_(i, j) != epsilon_ * gram_(j, i)) {
        throw FormError(FormError::Kind::kNotSymmetric,
                        "gram is not " + std::string(epsilon_ == 1 ? "+" : "-") +
                            "1-symmetric at entry (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
      }
    }
  }
}

EpsSymmetricForm EpsSymmetricForm::restrict_to(const IntMatrix& j) const {
  return EpsSymmetricForm(epsilon_, j.transpose() * gram_ * j);
}

IntMatrix EpsSymmetricForm::pairing(const IntMatrix& j1,
                                    const IntMatrix& j2) const {
  return j1.transpose() * gram_ * j2;
}

EpsSymmetricForm orthogonal_sum(const EpsSymmetricForm& a,
                                const EpsSymmetricForm& b) {
  if (a.epsilon() != b.epsilon()) {
    throw FormError(FormError::Kind::kNotSymmetric,
                    "orthogonal sum of forms with different epsilon");
  }
  return EpsSymmetricForm(a.epsilon(), IntMatrix::direct_sum(a.gram(), b.gram()));
}

EpsSymmetricForm hyperbolic(int epsilon) {
  IntMatrix g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = epsilon;
  return EpsSymmetricForm(epsilon, g);
}

Subform Subform::saturated_from(const EpsSymmetricForm& parent,
                                const IntMatrix& inclusion) {
  IntMatrix sat = saturation(inclusion, parent.dim());
  bool changed = sat.cols() != inclusion.cols() ||
                 !solve_integral(inclusion, sat, nullptr);
  return Subform{parent, changed ? sat : inclusion, changed};
}

InertiaProfile symmetric_inertia(const IntMatrix& symmetric) {
  require_square(symmetric, "symmetric matrix");
  RatRows a = to_rational(symmetric);
  std::vector<std::size_t> live(a.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  InertiaProfile out;

  while (!live.empty()) {
    // Prefer a nonzero diagonal pivot.
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) {
      return sgn(a[i][i]) != 0;
    });
    if (diag != live.end()) {
      const std::size_t p = *diag;
      const Rational piv = a[p][p];
      (sgn(piv) > 0 ? out.r_plus : out.r_minus) += 1;
      live.erase(diag);
      for (std::size_t i : live) {
        if (sgn(a[i][p]) == 0) continue;
        const Rational factor = a[i][p] / piv;
        for (std::size_t j : live) a[i][j] -= factor * a[p][j];
      }
      continue;
    }
    // All diagonals vanish: a nonzero off-diagonal entry spans a hyperbolic
    // plane with inertia (1, 1).
    std::size_t p = 0, q = 0;
    bool found = false;
    for (std::size_t x = 0; x < live.size() && !found; ++x) {
      for (std::size_t y = x + 1; y < live.size(); ++y) {
        if (sgn(a[live[x]][live[y]]) != 0) {
          p = live[x];
          q = live[y];
          found = true;
          break;
        }
      }
    }
    if (!found) {
      out.nullity += live.size();
      break;
    }
    out.r_plus += 1;
    out.r_minus += 1;
    live.erase(std::remove(live.begin(), live.end(), p), live.end());
    live.erase(std::remove(live.begin(), live.end(), q), live.end());
    // Schur complement of [[0, b], [b, 0]]: inverse is [[0, 1/b], [1/b, 0]].
    const Rational inv_b = 1 / a[p][q];
    for (std::size_t i : live) {
      const Rational xp = a[i][p];
      const Rational xq = a[i][q];
      if (sgn(xp) == 0 && sgn(xq) == 0) continue;
      for (std::size_t j : live) {
        a[i][j] -= inv_b * (xp * a[q][j] + xq * a[p][j]);
      }
    }
  }
  return out;
}

InertiaProfile inertia(const EpsSymmetricForm& f) {
  if (f.epsilon() == 1) return symmetric_inertia(f.gram());
  // i*G is hermitian; its real symmetric doubling [[0, -G], [G, 0]] has every
  // eigenvalue of i*G with multiplicity two.
  const std::size_t k = f.dim();
  IntMatrix doubled(2 * k, 2 * k);
  doubled.set_block(0, k, -f.gram());
  doubled.set_block(k, 0, f.gram());
  InertiaProfile d = symmetric_inertia(doubled);
  return {d.r_plus / 2, d.r_minus / 2, d.nullity / 2};
}

Subform radical(const EpsSymmetricForm& f) {
  return Subform{f, kernel_basis(f.gram()), false};
}

Subform annihilator(const Subform& s) {
  return Subform{s.parent,
                 kernel_basis(s.inclusion.transpose() * s.parent.gram()), false};
}

void check_sublagrangian(const EpsSymmetricForm& f, const IntMatrix& j) {
  if (j.rows() != f.dim()) {
    throw DimensionError("inclusion has " + std::to_string(j.rows()) +
                         " rows, form has dimension " + std::to_string(f.dim()));
  }
  if (!f.pairing(j, j).is_zero()) {
    throw FormError(FormError::Kind::kNotIsotropic,
                    "subform is not isotropic: j^T B j != 0");
  }
  SmithDecomposition sj = smith_normal_form(j);
  bool saturated = sj.rank == j.cols();
  for (std::size_t i = 0; i < sj.rank && saturated; ++i) {
    saturated = sj.d(i, i) == 1;
  }
  if (!saturated) {
    throw FormError(FormError::Kind::kNotSaturated,
                    "subform basis does not span a direct summand");
  }
  SmithDecomposition sa = smith_normal_form(j.transpose() * f.gram());
  bool surjective = sa.rank == j.cols();
  for (std::size_t i = 0; i < sa.rank && surjective; ++i) {
    surjective = sa.d(i, i) == 1;
  }
  if (!surjective) {
    throw FormError(FormError::Kind::kNotSurjective,
                    "j^T B : F -> L^* is not surjective");
  }
}

void check_lagrangian(const EpsSymmetricForm& f, const IntMatrix& j) {
  check_sublagrangian(f, j);
  IntMatrix perp = kernel_basis(j.transpose() * f.gram());
  if (perp.cols() != j.cols()) {
    throw FormError(FormError::Kind::kNotLagrangian,
                    "subform is isotropic but smaller than its annihilator (" +
                        std::to_string(j.cols()) + " vs " +
                        std::to_string(perp.cols()) + ")");
  }
}

bool is_lagrangian(const EpsSymmetricForm& f, const IntMatrix& j) {
  try {
    check_lagrangian(f, j);
    return true;
  } catch (const FormError&) {
    return false;
  }
}

EpsSymmetricForm sublagrangian_quotient(const EpsSymmetricForm& f,
                                        const Subform& l) {
  check_sublagrangian(f, l.inclusion);
  const IntMatrix& j = l.inclusion;
  const std::size_t m = j.cols();
  IntMatrix perp = kernel_basis(j.transpose() * f.gram());
  IntMatrix coords;
  if (!solve_integral(perp, j, &coords)) {
    throw FormError(FormError::Kind::kNotIsotropic,
                    "subform is not contained in its annihilator");
  }
  // perp * u_inv has L as the span of its first m columns.
  SmithDecomposition s = smith_normal_form(coords);
  IntMatrix basis = perp * s.u_inv;
  IntMatrix complement = basis.block(0, m, basis.rows(), basis.cols() - m);
  return f.restrict_to(complement);
}

void EnlargementSpec::validate() const {
  const std::size_t k = base.dim();
  if (c.rows() != k || c.cols() != l_plus) {
    throw DimensionError("enlargement: C must be " + std::to_string(k) + "x" +
                         std::to_string(l_plus) + ", got " + shape(c));
  }
  if (d.rows() != l_minus || d.cols() != l_plus) {
    throw DimensionError("enlargement: D must be " + std::to_string(l_minus) +
                         "x" + std::to_string(l_plus) + ", got " + shape(d));
  }
  if (e.rows() != l_plus || e.cols() != l_plus) {
    throw DimensionError("enlargement: E must be " + std::to_string(l_plus) +
                         "x" + std::to_string(l_plus) + ", got " + shape(e));
  }
  if (!(e == e.transpose().scaled(base.epsilon()))) {
    throw FormError(FormError::Kind::kNotSymmetric,
                    "enlargement: E is not epsilon-symmetric");
  }
}

EpsSymmetricForm enlarge(const EnlargementSpec& spec) {
  spec.validate();
  const std::size_t k = spec.base.dim();
  const std::size_t lm = spec.l_minus;
  const std::size_t lp = spec.l_plus;
  const int eps = spec.base.epsilon();
  IntMatrix g(k + lm + lp, k + lm + lp);
  g.set_block(0, 0, spec.base.gram());
  g.set_block(0, k + lm, spec.c);
  g.set_block(k, k + lm, spec.d);
  g.set_block(k + lm, 0, spec.c.transpose().scaled(eps));
  g.set_block(k + lm, k, spec.d.transpose().scaled(eps));
  g.set_block(k + lm, k + lm, spec.e);
  return EpsSymmetricForm(eps, std::move(g));
}

bool is_H_enlargement(const EnlargementSpec& spec) {
  spec.validate();
  if (spec.l_minus != spec.l_plus) return false;
  return abs(spec.d.determinant()) == 1;
}

EpsSymmetricForm perp_of_base(const EnlargementSpec& spec) {
  EpsSymmetricForm big = enlarge(spec);
  const std::size_t k = spec.base.dim();
  // Rows of B' belonging to F: (B 0 C).
  IntMatrix top = big.gram().block(0, 0, k, big.dim());
  return big.restrict_to(kernel_basis(top));
}

Inv1Report verify_inv1(const EpsSymmetricForm& base,
                       const EpsSymmetricForm& enlarged, std::size_t ell) {
  if (enlarged.dim() != base.dim() + ell) {
    throw DimensionError("verify_inv1: enlarged dimension " +
                         std::to_string(enlarged.dim()) + " != base dimension " +
                         std::to_string(base.dim()) + " + " +
                         std::to_string(ell));
  }
  if (base.epsilon() != enlarged.epsilon() ||
      !(enlarged.gram().block(0, 0, base.dim(), base.dim()) == base.gram())) {
    throw FormError(FormError::Kind::kNotMorphism,
                    "verify_inv1: base is not the leading block of the "
                    "enlargement");
  }
  InertiaProfile a = inertia(base);
  InertiaProfile b = inertia(enlarged);
  Inv1Report r;
  r.delta_sigma = b.signature() - a.signature();
  r.delta_nullity =
      static_cast<long>(b.nullity) - static_cast<long>(a.nullity);
  const long total = std::labs(r.delta_sigma) + std::labs(r.delta_nullity);
  r.bound_ok = total <= static_cast<long>(ell);
  if (ell == 1) r.equality_if_rank1 = total == 1;
  return r;
}

EpsSymmetricForm wall_triad_form(const TriadLagrangians& t) {
  const EpsSymmetricForm& f = t.ambient;
  const IntMatrix* js[3] = {&t.j_minus, &t.j_dprime, &t.j_plus};
  const char* names[3] = {"L-", "L''", "L+"};
  for (int i = 0; i < 3; ++i) {
    try {
      check_lagrangian(f, *js[i]);
    } catch (const FormError& e) {
      throw FormError(FormError::Kind::kNotLagrangian,
                      std::string(names[i]) + " is not a lagrangian: " + e.what());
    }
  }
  const std::size_t n0 = t.j_minus.cols();
  const std::size_t n1 = t.j_dprime.cols();
  const std::size_t n2 = t.j_plus.cols();
  const std::size_t offs[3] = {0, n0, n0 + n1};
  // Adjoint of B as a map F -> F^* has matrix gram^T.
  const IntMatrix adj = f.gram().transpose();
  IntMatrix m(n0 + n1 + n2, n0 + n1 + n2);
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      IntMatrix blk = js[a]->transpose() * adj * *js[b];
      m.set_block(offs[a], offs[b], blk);
      m.set_block(offs[b], offs[a], -(js[b]->transpose() * adj * *js[a]));
    }
  }
  IntMatrix all = IntMatrix::hstack(IntMatrix::hstack(t.j_minus, t.j_dprime),
                                    t.j_plus);
  IntMatrix n = kernel_basis(all);
  return EpsSymmetricForm(-f.epsilon(), n.transpose() * m * n);
}

long wall_triad_signature(const TriadLagrangians& t) {
  return inertia(wall_triad_form(t)).signature();
}

bool metabolic_bound(const EpsSymmetricForm& f_sub,
                     const EpsSymmetricForm& f_meta, const IntMatrix& j,
                     const IntMatrix& lagrangian) {
  if (j.rows() != f_meta.dim() || j.cols() != f_sub.dim()) {
    throw DimensionError("metabolic_bound: j must be " +
                         std::to_string(f_meta.dim()) + "x" +
                         std::to_string(f_sub.dim()) + ", got " + shape(j));
  }
  if (f_sub.epsilon() != f_meta.epsilon() ||
      !(f_meta.pairing(j, j) == f_sub.gram())) {
    throw FormError(FormError::Kind::kNotMorphism,
                    "metabolic_bound: j^T B j != B'");
  }
  try {
    check_lagrangian(f_meta, lagrangian);
  } catch (const FormError& e) {
    throw FormError(FormError::Kind::kNotLagrangian,
                    std::string("metabolic_bound: supplied lagrangian invalid: ") +
                        e.what());
  }
  InertiaProfile p = inertia(f_sub);
  const long lhs = std::labs(p.signature());
  const long rhs = static_cast<long>(f_meta.dim()) -
                   static_cast<long>(f_sub.dim()) +
                   static_cast<long>(p.nullity);
  return lhs <= rhs;
}

std::optional<IntMatrix> find_lagrangian(const EpsSymmetricForm& f, int bound) {
  const std::size_t k = f.dim();
  if (k == 0) return IntMatrix(0, 0);
  if (k > 4 || k % 2 != 0) return std::nullopt;
  const std::size_t half = k / 2;

  // Isotropic vectors, first nonzero coordinate positive.
  std::vector<IntMatrix> iso;
  std::vector<long> coords(k, -bound);
  const long span = 2L * bound + 1;
  long total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= span;
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx;
    IntMatrix v(k, 1);
    bool nonzero = false, leading_positive = false;
    for (std::size_t i = 0; i < k; ++i) {
      long c = rest % span - bound;
      rest /= span;
      v(i, 0) = c;
      if (!nonzero && c != 0) {
        nonzero = true;
        leading_positive = c > 0;
      }
    }
    if (!nonzero || !leading_positive) continue;
    if (f.pairing(v, v).is_zero()) iso.push_back(std::move(v));
  }

  if (half == 1) {
    for (const auto& v : iso) {
      if (is_lagrangian(f, v)) return v;
    }
    return std::nullopt;
  }
  for (std::size_t a = 0; a < iso.size(); ++a) {
    for (std::size_t b = a + 1; b < iso.size(); ++b) {
      if (!f.pairing(iso[a], iso[b]).is_zero()) continue;
      IntMatrix l = IntMatrix::hstack(iso[a], iso[b]);
      if (is_lagrangian(f, l)) return l;
    }
  }
  return std::nullopt;
}

}  // namespace cobord
