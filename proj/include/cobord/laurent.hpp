#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/int_matrix.hpp"

namespace cobord {

/// Element of Z[t, t^-1]: coefficient i multiplies t^(lowest_degree + i).
/// The first and last stored coefficients are nonzero; zero has no
/// coefficients and lowest_degree 0.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long lowest_degree, std::vector<Integer> coefficients);
  LaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPolynomial monomial(const Integer& c, long k);
  static LaurentPolynomial t() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long lowest_degree() const noexcept { return lowest_; }
  long highest_degree() const noexcept {
    return lowest_ + static_cast<long>(coeffs_.size()) - 1;
  }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(long k) const;

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  bool operator==(const LaurentPolynomial& o) const = default;

  /// t^k * p.
  LaurentPolynomial shifted(long k) const;
  /// p(t^-1).
  LaurentPolynomial inverted() const;
  /// Value at t = 1.
  Integer at_one() const;

  /// Exact quotient p / q; throws std::domain_error if q does not divide p.
  LaurentPolynomial divided_exactly(const LaurentPolynomial& q) const;

  /// Ascending canonical form, e.g. "1 - t + t^2", "-2t^-1 + 3".
  std::string to_string() const;
  /// Accepts the to_string grammar and also "3*t^2"; whitespace is ignored.
  static LaurentPolynomial parse(std::string_view text);

 private:
  void normalize();
  long lowest_ = 0;
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

using LaurentMatrix = std::vector<std::vector<LaurentPolynomial>>;

/// t * a + b as a Laurent matrix (a, b integer matrices of equal shape).
LaurentMatrix linear_pencil(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free determinant; the 0x0 determinant is 1.
LaurentPolynomial laurent_det(const LaurentMatrix& m);

/// Representative with lowest degree 0 and positive lowest coefficient.
LaurentPolynomial s_normalize(const LaurentPolynomial& p);
/// p1 = +-t^k p0 for some k.
bool poly_s_equivalent(const LaurentPolynomial& p0, const LaurentPolynomial& p1);

/// Checks a supplied witness for H-equivalence:
/// p0 q0(t) q0(t^-1) ~S p1 q1(t) q1(t^-1) with q0(1), q1(1) in {-1, 1}.
bool verify_h_equivalence_witness(const LaurentPolynomial& p0,
                                  const LaurentPolynomial& p1,
                                  const LaurentPolynomial& q0,
                                  const LaurentPolynomial& q1);

}  // namespace cobord
