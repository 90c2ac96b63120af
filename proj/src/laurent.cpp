#include "cobord/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cobord/errors.hpp"

namespace cobord {

LaurentPolynomial::LaurentPolynomial(long lowest_degree,
                                     std::vector<Integer> coefficients)
    : lowest_(lowest_degree), coeffs_(std::move(coefficients)) {
  normalize();
}

LaurentPolynomial::LaurentPolynomial(long constant)
    : lowest_(0), coeffs_{Integer(constant)} {
  normalize();
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& c, long k) {
  return LaurentPolynomial(k, {c});
}

void LaurentPolynomial::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && sgn(coeffs_[first]) == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    lowest_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (sgn(coeffs_[last - 1]) == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<Integer>(coeffs_.begin() + first, coeffs_.begin() + last);
    lowest_ += static_cast<long>(first);
  }
}

Integer LaurentPolynomial::coefficient(long k) const {
  if (is_zero() || k < lowest_ || k > highest_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k - lowest_)];
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const long lo = std::min(lowest_, o.lowest_);
  const long hi = std::max(highest_degree(), o.highest_degree());
  std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c[static_cast<std::size_t>(lowest_ - lo) + i] += coeffs_[i];
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    c[static_cast<std::size_t>(o.lowest_ - lo) + i] += o.coeffs_[i];
  }
  return LaurentPolynomial(lo, std::move(c));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial n = *this;
  for (auto& c : n.coeffs_) c = -c;
  return n;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return LaurentPolynomial(lowest_ + o.lowest_, std::move(c));
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
  if (is_zero()) return *this;
  LaurentPolynomial s = *this;
  s.lowest_ += k;
  return s;
}

LaurentPolynomial LaurentPolynomial::inverted() const {
  if (is_zero()) return *this;
  std::vector<Integer> c(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPolynomial(-highest_degree(), std::move(c));
}

Integer LaurentPolynomial::at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPolynomial LaurentPolynomial::divided_exactly(
    const LaurentPolynomial& q) const {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return {};
  if (coeffs_.size() < q.coeffs_.size()) {
    throw std::domain_error("polynomial division is not exact");
  }
  std::vector<Integer> rem = coeffs_;
  const std::size_t n = q.coeffs_.size();
  std::vector<Integer> quot(rem.size() - n + 1);
  const Integer& lead = q.coeffs_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + n - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw std::domain_error("polynomial division is not exact");
    }
    Integer f = top / lead;
    for (std::size_t i = 0; i < n; ++i) rem[k + i] -= f * q.coeffs_[i];
    quot[k] = std::move(f);
  }
  for (const auto& r : rem) {
    if (sgn(r) != 0) throw std::domain_error("polynomial division is not exact");
  }
  return LaurentPolynomial(lowest_ - q.lowest_, std::move(quot));
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const long k = lowest_ + static_cast<long>(i);
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 't';
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  LaurentPolynomial out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) +
                                "' at offset " + std::to_string(pos) + ": " + why);
  };
  auto read_int = [&](std::string* digits) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    *digits = s.substr(start, pos - start);
    return pos > start;
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    std::string digits;
    Integer coef = 1;
    bool have_coef = read_int(&digits);
    if (have_coef) coef = Integer(digits);
    long exponent = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!have_coef) fail("'*' without a coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != 't') fail("expected 't' after '*'");
    }
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        int esign = 1;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
          esign = s[pos] == '-' ? -1 : 1;
          ++pos;
        }
        std::string e;
        if (!read_int(&e)) fail("missing exponent");
        exponent = esign * std::stol(e);
      }
    } else if (!have_coef) {
      fail("expected a coefficient or 't'");
    }
    out = out + monomial(sign * coef, exponent);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
  return os << p.to_string();
}

LaurentMatrix linear_pencil(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("linear_pencil: shape mismatch");
  }
  LaurentMatrix m(a.rows(), std::vector<LaurentPolynomial>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m[i][j] = LaurentPolynomial(0, {b(i, j), a(i, j)});
    }
  }
  return m;
}

LaurentPolynomial laurent_det(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionError("laurent_det: matrix not square");
  }
  if (n == 0) return LaurentPolynomial(1);

  // Multiply each row by a power of t so every entry lies in Z[t].
  LaurentMatrix a = m;
  long total_shift = 0;
  for (auto& row : a) {
    bool any = false;
    long low = 0;
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      low = any ? std::min(low, e.lowest_degree()) : e.lowest_degree();
      any = true;
    }
    if (!any) return {};
    for (auto& e : row) e = e.shifted(-low);
    total_shift += low;
  }

  LaurentPolynomial prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k].is_zero()) ++swap;
      if (swap == n) return {};
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divided_exactly(prev);
      }
      a[i][k] = LaurentPolynomial();
    }
    prev = a[k][k];
  }
  LaurentPolynomial det = a[n - 1][n - 1].shifted(total_shift);
  return sign < 0 ? -det : det;
}

LaurentPolynomial s_normalize(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial s = p.shifted(-p.lowest_degree());
  return sgn(s.coefficients().front()) < 0 ? -s : s;
}

bool poly_s_equivalent(const LaurentPolynomial& p0,
                       const LaurentPolynomial& p1) {
  return s_normalize(p0) == s_normalize(p1);
}

bool verify_h_equivalence_witness(const LaurentPolynomial& p0,
                                  const LaurentPolynomial& p1,
                                  const LaurentPolynomial& q0,
                                  const LaurentPolynomial& q1) {
  if (abs(q0.at_one()) != 1 || abs(q1.at_one()) != 1) return false;
  return poly_s_equivalent(p0 * q0 * q0.inverted(), p1 * q1 * q1.inverted());
}

}  // namespace cobord
