#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/int_matrix.hpp"
#include "cobord/laurent.hpp"

namespace cobord {

/// xi = exp(2 pi i p / q) with gcd(p, q) = 1, 0 <= p < q and q >= 2.
class RootOfUnity {
 public:
  /// Reduces p/q; throws std::invalid_argument when the reduced root is 1.
  RootOfUnity(long p, long q);
  /// Parses "p/q".
  static RootOfUnity parse(std::string_view text);

  long p() const noexcept { return p_; }
  long q() const noexcept { return q_; }
  std::string to_string() const;
  bool operator==(const RootOfUnity&) const = default;

  /// All primitive roots p/q with 2 <= q <= q_max, sorted by angle.
  static std::vector<RootOfUnity> all_up_to(long q_max);

 private:
  long p_;
  long q_;
};

namespace detail {
struct CycloContext;
}

/// Element of Q(zeta_q), zeta_q = exp(2 pi i / q), stored as a polynomial in
/// zeta_q of degree < phi(q) reduced modulo the q-th cyclotomic polynomial.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  /// Zero of Q(zeta_q).
  explicit CyclotomicNumber(long q);
  CyclotomicNumber(long q, const Rational& value);

  /// zeta_q^k.
  static CyclotomicNumber zeta_power(long q, long k);
  /// sum_k c_k zeta_q^k for arbitrary (unreduced) coefficient lists.
  static CyclotomicNumber from_powers(long q, const std::vector<Rational>& c);

  long modulus() const noexcept { return q_; }
  /// Coefficients of 1, zeta, ..., zeta^(phi(q)-1).
  const std::vector<Rational>& residue() const noexcept { return c_; }
  bool is_zero() const;

  CyclotomicNumber operator+(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-() const;
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  CyclotomicNumber operator/(const CyclotomicNumber& o) const;
  CyclotomicNumber scaled(const Rational& r) const;
  /// Throws std::domain_error on zero.
  CyclotomicNumber inverse() const;
  bool operator==(const CyclotomicNumber& o) const;

  /// Complex conjugation zeta -> zeta^-1.
  CyclotomicNumber conjugate() const;

  /// "1/2 - 3*z + z^2" with z = zeta_q; only used for diagnostics.
  std::string to_string() const;

 private:
  CyclotomicNumber(long q, std::vector<Rational> c,
                   std::shared_ptr<const detail::CycloContext> ctx);
  void require_same_field(const CyclotomicNumber& o) const;

  long q_ = 0;
  std::vector<Rational> c_;
  std::shared_ptr<const detail::CycloContext> ctx_;
};

/// Coefficients of the q-th cyclotomic polynomial, ascending.
std::vector<Integer> cyclotomic_polynomial(long q);
/// Euler phi.
long euler_phi(long q);

CyclotomicNumber conjugate(const CyclotomicNumber& z);
CyclotomicNumber eval_at(const LaurentPolynomial& p, const RootOfUnity& xi);

using CycloMatrix = std::vector<std::vector<CyclotomicNumber>>;

CycloMatrix to_cyclo(const IntMatrix& m, long q);
CycloMatrix cyclo_conjugate_transpose(const CycloMatrix& m);
CycloMatrix cyclo_multiply(const CycloMatrix& a, const CycloMatrix& b);

/// Rank over Q(zeta_q); throws std::invalid_argument on mixed moduli.
std::size_t cyclo_rank(const CycloMatrix& m);
/// Basis of {w : m w = 0} as column vectors.
std::vector<std::vector<CyclotomicNumber>> cyclo_nullspace(const CycloMatrix& m,
                                                           std::size_t cols,
                                                           long q);
CyclotomicNumber cyclo_det(const CycloMatrix& m, long q);

enum class Sign { kNegative = -1, kZero = 0, kPositive = 1 };

/// Sign of a real element of Q(zeta_q). Rejects non-real input with
/// std::invalid_argument; exact zero is decided symbolically; otherwise
/// interval evaluation starts at 64 bits and doubles up to max_bits, after
/// which PrecisionError is thrown.
Sign certified_sign(const CyclotomicNumber& z, long max_bits = 4096);

struct HermitianInertia {
  std::size_t r_plus = 0;
  std::size_t r_minus = 0;
  std::size_t nullity = 0;
  long signature() const {
    return static_cast<long>(r_plus) - static_cast<long>(r_minus);
  }
};

/// Inertia of a hermitian matrix over Q(zeta_q) (h = conjugate transpose of
/// h, checked exactly).
HermitianInertia hermitian_inertia(const CycloMatrix& h, long q);

}  // namespace cobord
