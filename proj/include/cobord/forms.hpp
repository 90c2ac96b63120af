#pragma once

#include <cstddef>
#include <optional>

#include "cobord/int_matrix.hpp"

namespace cobord {

/// (F, B) with F = Z^k and gram(i, j) = B(e_i, e_j); gram = epsilon * gram^T.
class EpsSymmetricForm {
 public:
  EpsSymmetricForm() = default;
  /// Throws FormError(kNotSymmetric) unless gram = epsilon * gram^T.
  EpsSymmetricForm(int epsilon, IntMatrix gram);

  int epsilon() const noexcept { return epsilon_; }
  const IntMatrix& gram() const noexcept { return gram_; }
  std::size_t dim() const noexcept { return gram_.rows(); }

  /// j^T gram j, the form pulled back along j.
  EpsSymmetricForm restrict_to(const IntMatrix& j) const;
  /// Pairing matrix B(j1 x, j2 y).
  IntMatrix pairing(const IntMatrix& j1, const IntMatrix& j2) const;

  bool operator==(const EpsSymmetricForm&) const = default;

 private:
  int epsilon_ = 1;
  IntMatrix gram_;
};

EpsSymmetricForm orthogonal_sum(const EpsSymmetricForm& a,
                                const EpsSymmetricForm& b);
/// Hyperbolic form [[0, 1], [eps, 0]] of rank 2.
EpsSymmetricForm hyperbolic(int epsilon);

/// Subform given by an inclusion F' = Z^m -> F (columns are a basis).
struct Subform {
  EpsSymmetricForm parent;
  IntMatrix inclusion;  // dim(parent) x m
  bool resaturated = false;

  /// Saturates the column span of `inclusion` first, flagging if it changed.
  static Subform saturated_from(const EpsSymmetricForm& parent,
                                const IntMatrix& inclusion);
  std::size_t rank() const { return inclusion.cols(); }
  EpsSymmetricForm form() const { return parent.restrict_to(inclusion); }
};

struct InertiaProfile {
  std::size_t r_plus = 0;
  std::size_t r_minus = 0;
  std::size_t nullity = 0;

  long signature() const {
    return static_cast<long>(r_plus) - static_cast<long>(r_minus);
  }
  std::size_t dim() const { return r_plus + r_minus + nullity; }
  bool operator==(const InertiaProfile&) const = default;
};

/// Inertia of a symmetric rational matrix by exact symmetric pivoting.
InertiaProfile symmetric_inertia(const IntMatrix& symmetric);
/// eps = +1: inertia of gram. eps = -1: inertia of the hermitian form i*gram.
InertiaProfile inertia(const EpsSymmetricForm& f);

Subform radical(const EpsSymmetricForm& f);
Subform annihilator(const Subform& s);

/// Distinct FormError kinds for: not isotropic, not saturated, j^T B not
/// surjective onto L^*.
void check_sublagrangian(const EpsSymmetricForm& f, const IntMatrix& j);
/// Sublagrangian that is its own annihilator.
void check_lagrangian(const EpsSymmetricForm& f, const IntMatrix& j);
bool is_lagrangian(const EpsSymmetricForm& f, const IntMatrix& j);

/// (L^perp / L, [B]).
EpsSymmetricForm sublagrangian_quotient(const EpsSymmetricForm& f,
                                        const Subform& l);

/// F' = F + L- + L+ with B' = [[B, 0, C], [0, 0, D], [eps C^T, eps D^T, E]],
/// C: k x l+, D: l- x l+, E: l+ x l+ with E = eps E^T.
struct EnlargementSpec {
  EpsSymmetricForm base;
  std::size_t l_minus = 0;
  std::size_t l_plus = 0;
  IntMatrix c;
  IntMatrix d;
  IntMatrix e;

  /// Throws DimensionError / FormError if the blocks do not fit.
  void validate() const;
};

EpsSymmetricForm enlarge(const EnlargementSpec& spec);
bool is_H_enlargement(const EnlargementSpec& spec);
/// Annihilator of the base inside the enlargement, with the restricted form.
EpsSymmetricForm perp_of_base(const EnlargementSpec& spec);

struct Inv1Report {
  long delta_sigma = 0;
  long delta_nullity = 0;
  bool bound_ok = false;
  std::optional<bool> equality_if_rank1;  // set only when ell == 1
};

/// Compares a form with a rank-ell enlargement of it (base must be the
/// leading principal block of `enlarged`).
Inv1Report verify_inv1(const EpsSymmetricForm& base,
                       const EpsSymmetricForm& enlarged, std::size_t ell);

/// Lagrangians L-, L'', L+ of a common form.
struct TriadLagrangians {
  EpsSymmetricForm ambient;
  IntMatrix j_minus;
  IntMatrix j_dprime;
  IntMatrix j_plus;
};

/// The (-eps)-symmetric form on ker((j- j'' j+)) with blocks
/// [[0, a, b], [-a^*, 0, c], [-b^*, -c^*, 0]], a = j-^* B j'' etc., where B is
/// read as the adjoint F -> F^*.
EpsSymmetricForm wall_triad_form(const TriadLagrangians& t);
long wall_triad_signature(const TriadLagrangians& t);

/// |sigma(F')| <= dim F - dim F' + n(F') for a morphism j: F' -> F into a
/// metabolic form with the supplied lagrangian.
bool metabolic_bound(const EpsSymmetricForm& f_sub,
                     const EpsSymmetricForm& f_meta, const IntMatrix& j,
                     const IntMatrix& lagrangian);

/// Exhaustive search for a lagrangian spanned by vectors with entries in
/// [-bound, bound]. Only dimensions <= 4 are searched.
std::optional<IntMatrix> find_lagrangian(const EpsSymmetricForm& f,
                                         int bound = 3);

}  // namespace cobord
