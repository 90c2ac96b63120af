#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cobord/cyclotomic.hpp"
#include "cobord/forms.hpp"
#include "cobord/int_matrix.hpp"
#include "cobord/laurent.hpp"

namespace cobord {

/// Square integer matrix A with parity n mod 2, epsilon = (-1)^n.
class SeifertForm {
 public:
  SeifertForm() = default;
  /// Throws DimensionError unless a is square.
  SeifertForm(IntMatrix a, int parity);

  const IntMatrix& matrix() const noexcept { return a_; }
  int parity() const noexcept { return parity_; }
  int epsilon() const noexcept { return parity_ == 0 ? 1 : -1; }
  std::size_t dim() const noexcept { return a_.rows(); }
  bool operator==(const SeifertForm&) const = default;

 private:
  IntMatrix a_;
  int parity_ = 1;
};

/// (F, A + eps A^T).
EpsSymmetricForm symmetrize(const SeifertForm& s);

/// det(t A + eps A^T) exactly as computed.
LaurentPolynomial alexander_raw(const SeifertForm& s);
/// s_normalize(alexander_raw(s)); the empty matrix gives 1.
LaurentPolynomial alexander(const SeifertForm& s);

enum class SMove { kColumn, kRow };

/// kColumn: [[A, 0, alpha], [0, 0, 0], [0, 1, 0]] with alpha a k x 1 column.
/// kRow:    [[A, 0, 0], [0, 0, 1], [beta, 0, 0]] with beta a 1 x k row.
SeifertForm s_enlarge(const SeifertForm& s, SMove variant,
                      const IntMatrix& vector);

/// Every S-reduction visible in the given basis: pairs (i, j) where row and
/// column i vanish except A(i, j), A(j, i) with (A(i, j), A(j, i)) one of
/// (+-1, 0), (0, +-1); deleting i and j gives a candidate. Deduplicated.
std::vector<SeifertForm> s_reduce_candidates(const SeifertForm& s);

/// A' = [[A, 0, alpha], [0, 0, x], [beta, y, z]] on F + Z^l- + Z^l+.
/// alpha: k x l+, x: l- x l+, beta: l+ x k, y: l+ x l-, z: l+ x l+.
struct SeifertEnlargementSpec {
  SeifertForm base;
  std::size_t l_minus = 0;
  std::size_t l_plus = 0;
  IntMatrix alpha, beta, x, y, z;

  void validate() const;
};

SeifertForm h_enlarge(const SeifertEnlargementSpec& spec);
/// l- = l+ and |det(x + eps y^T)| = 1.
bool is_h_enlargement(const SeifertEnlargementSpec& spec);

/// B_A(xi) = (1 - xi) A - eps (1 - conj xi) A^T over Q(zeta_q).
CycloMatrix lt_matrix(const SeifertForm& s, const RootOfUnity& xi);

/// Signature of a (-eps)-hermitian matrix over Q(zeta_q): for eps = -1 the
/// matrix is hermitian; for eps = +1 it is multiplied by zeta_q - zeta_q^-1,
/// a positive multiple of i (the signature vanishes identically when q = 2).
long lt_signature_of(const CycloMatrix& m, int epsilon, long q);

struct LTResult {
  RootOfUnity xi;
  std::size_t nullity = 0;
  long signature = 0;
  bool alexander_value_is_zero = false;
};

LTResult lt_invariants(const SeifertForm& s, const RootOfUnity& xi);

struct EnlargementInvarianceReport {
  bool applicable = false;  // det(xi x + eps y^T) != 0
  bool preserved = false;   // sigma and n agree at xi
  long sigma_base = 0;
  long sigma_enlarged = 0;
  std::size_t nullity_base = 0;
  std::size_t nullity_enlarged = 0;
  long kernel_form_signature = 0;  // sigma of the kernel form (F, B)
  std::size_t kernel_form_dim = 0;
  long jump() const { return sigma_enlarged - sigma_base; }
};

EnlargementInvarianceReport verify_enlargement_invariance(
    const SeifertEnlargementSpec& spec, const RootOfUnity& xi);

struct MKInstance {
  SeifertForm a0;
  SeifertForm a1;
  long b_sigma = 0;
  long b_sigma0 = 0;
  long b_sigma1 = 0;
  RootOfUnity xi{1, 2};
};

struct MKReport {
  long lhs = 0;
  long rhs = 0;
  bool holds = false;
  long slack = 0;
};

MKReport mk_check(const MKInstance& inst);

struct DistinguishReport {
  bool distinguished = false;
  std::string witness;  // human-readable description
};

/// Compares normalized Alexander polynomials and (n, sigma) at every xi with
/// denominator <= sample_q. Never claims equivalence.
DistinguishReport distinguish(const SeifertForm& s0, const SeifertForm& s1,
                              long sample_q);

/// Bounded breadth-first search for a chain of S-moves and elementary
/// congruences from s0 to s1. Enlargement vectors have entries in
/// [-bound, bound]; intermediate dimensions stay <= max_dim. Returns the move
/// log if found; nullopt means "not found within the bounds".
std::optional<std::vector<std::string>> s_equivalence_search(
    const SeifertForm& s0, const SeifertForm& s1, int depth = 4, int bound = 3,
    std::size_t max_dim = 4, std::size_t node_budget = 200000);

}  // namespace cobord
