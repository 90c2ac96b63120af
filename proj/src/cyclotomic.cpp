#include "cobord/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cobord/errors.hpp"

namespace cobord {

// ---------------------------------------------------------------- roots

RootOfUnity::RootOfUnity(long p, long q) {
  if (q <= 0) throw std::invalid_argument("root of unity p/q needs q > 0");
  long r = p % q;
  if (r < 0) r += q;
  long g = std::gcd(r, q);
  p_ = r / g;
  q_ = q / g;
  if (q_ < 2) {
    throw std::invalid_argument(
        "xi = " + std::to_string(p) + "/" + std::to_string(q) +
        " reduces to xi = 1, which is excluded: signatures and nullities are "
        "only defined for xi != 1 on the unit circle");
  }
}

RootOfUnity RootOfUnity::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    throw std::invalid_argument("root of unity must be written p/q, got '" + s + "'");
  }
  try {
    std::size_t used = 0;
    long p = std::stol(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("trailing characters");
    std::string qs = s.substr(slash + 1);
    long q = std::stol(qs, &used);
    if (used != qs.size()) throw std::invalid_argument("trailing characters");
    return RootOfUnity(p, q);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("root of unity out of range: '" + s + "'");
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).find("excluded") != std::string::npos) throw;
    throw std::invalid_argument("root of unity must be written p/q, got '" + s + "'");
  }
}

std::string RootOfUnity::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

std::vector<RootOfUnity> RootOfUnity::all_up_to(long q_max) {
  std::vector<RootOfUnity> out;
  for (long q = 2; q <= q_max; ++q) {
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end(), [](const RootOfUnity& a, const RootOfUnity& b) {
    const long lhs = a.p() * b.q();
    const long rhs = b.p() * a.q();
    return lhs != rhs ? lhs < rhs : a.q() < b.q();
  });
  return out;
}

// ---------------------------------------------------------------- field

long euler_phi(long q) {
  long result = q;
  long n = q;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(long q) {
  if (q < 1) throw std::invalid_argument("cyclotomic polynomial needs q >= 1");
  // t^q - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> c(static_cast<std::size_t>(q) + 1);
  c[0] = -1;
  c[static_cast<std::size_t>(q)] = 1;
  LaurentPolynomial p(0, c);
  for (long d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    p = p.divided_exactly(LaurentPolynomial(0, cyclotomic_polynomial(d)));
  }
  return p.coefficients();
}

namespace detail {

struct CycloContext {
  long q = 0;
  std::size_t phi = 0;
  std::vector<Integer> cyclo;
  // powers[k] = t^k mod Phi_q for 0 <= k < powers.size().
  std::vector<std::vector<Integer>> powers;
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::CycloContext> context_for(long q) {
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const detail::CycloContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  auto ctx = std::make_shared<detail::CycloContext>();
  ctx->q = q;
  ctx->cyclo = cyclotomic_polynomial(q);
  ctx->phi = ctx->cyclo.size() - 1;
  const std::size_t phi = ctx->phi;
  const std::size_t count = std::max<std::size_t>(static_cast<std::size_t>(q),
                                                  2 * phi);
  std::vector<Integer> cur(phi);
  cur[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    ctx->powers.push_back(cur);
    // cur <- t * cur mod Phi_q (monic).
    Integer top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (sgn(top) != 0) {
      for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * ctx->cyclo[i];
    }
  }
  cache[q] = ctx;
  return ctx;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(long q)
    : q_(q), ctx_(context_for(q)) {
  c_.assign(ctx_->phi, Rational(0));
}

CyclotomicNumber::CyclotomicNumber(long q, const Rational& value)
    : CyclotomicNumber(q) {
  c_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(
    long q, std::vector<Rational> c,
    std::shared_ptr<const detail::CycloContext> ctx)
    : q_(q), c_(std::move(c)), ctx_(std::move(ctx)) {}

CyclotomicNumber CyclotomicNumber::from_powers(long q,
                                               const std::vector<Rational>& c) {
  CyclotomicNumber z(q);
  const auto& pw = z.ctx_->powers;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    const auto& row = pw[k % static_cast<std::size_t>(q)];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (sgn(row[i]) != 0) z.c_[i] += c[k] * row[i];
    }
  }
  return z;
}

CyclotomicNumber CyclotomicNumber::zeta_power(long q, long k) {
  long r = k % q;
  if (r < 0) r += q;
  std::vector<Rational> c(static_cast<std::size_t>(r) + 1);
  c[static_cast<std::size_t>(r)] = 1;
  return from_powers(q, c);
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& r) { return sgn(r) == 0; });
}

void CyclotomicNumber::require_same_field(const CyclotomicNumber& o) const {
  if (q_ != o.q_) {
    throw std::invalid_argument("cyclotomic arithmetic with mixed moduli " +
                                std::to_string(q_) + " and " +
                                std::to_string(o.q_));
  }
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
  require_same_field(o);
  std::vector<Rational> c = c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return CyclotomicNumber(q_, std::move(c), ctx_);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return CyclotomicNumber(q_, std::move(c), ctx_);
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
  require_same_field(o);
  std::vector<Rational> c = c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return CyclotomicNumber(q_, std::move(c), ctx_);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  require_same_field(o);
  const std::size_t phi = c_.size();
  std::vector<Rational> conv(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (sgn(o.c_[j]) != 0) conv[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rational> out(conv.begin(), conv.begin() + phi);
  for (std::size_t k = phi; k < conv.size(); ++k) {
    if (sgn(conv[k]) == 0) continue;
    const auto& row = ctx_->powers[k];
    for (std::size_t i = 0; i < phi; ++i) {
      if (sgn(row[i]) != 0) out[i] += conv[k] * row[i];
    }
  }
  return CyclotomicNumber(q_, std::move(out), ctx_);
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& r) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= r;
  return CyclotomicNumber(q_, std::move(c), ctx_);
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta)");
  // Solve (multiplication by *this) x = 1 over Q.
  const std::size_t phi = c_.size();
  std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi + 1));
  for (std::size_t j = 0; j < phi; ++j) {
    std::vector<Rational> basis(phi);
    basis[j] = 1;
    CyclotomicNumber col = *this * CyclotomicNumber(q_, basis, ctx_);
    for (std::size_t i = 0; i < phi; ++i) a[i][j] = col.c_[i];
  }
  a[0][phi] = 1;
  for (std::size_t k = 0; k < phi; ++k) {
    std::size_t piv = k;
    while (sgn(a[piv][k]) == 0) ++piv;  // multiplication map is invertible
    std::swap(a[k], a[piv]);
    const Rational inv = 1 / a[k][k];
    for (std::size_t j = k; j <= phi; ++j) a[k][j] *= inv;
    for (std::size_t i = 0; i < phi; ++i) {
      if (i == k || sgn(a[i][k]) == 0) continue;
      const Rational f = a[i][k];
      for (std::size_t j = k; j <= phi; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rational> x(phi);
  for (std::size_t i = 0; i < phi; ++i) x[i] = a[i][phi];
  return CyclotomicNumber(q_, std::move(x), ctx_);
}

CyclotomicNumber CyclotomicNumber::operator/(const CyclotomicNumber& o) const {
  return *this * o.inverse();
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  return q_ == o.q_ && c_ == o.c_;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
  std::vector<Rational> powers(static_cast<std::size_t>(q_));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    std::size_t target = k == 0 ? 0 : static_cast<std::size_t>(q_) - k;
    powers[target] += c_[k];
  }
  return from_powers(q_, powers);
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!first) os << (sgn(c_[k]) < 0 ? " - " : " + ");
    else if (sgn(c_[k]) < 0) os << '-';
    first = false;
    Rational mag = abs(c_[k]);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'z';
    if (k > 1) os << '^' << k;
  }
  return first ? "0" : os.str();
}

CyclotomicNumber conjugate(const CyclotomicNumber& z) { return z.conjugate(); }

CyclotomicNumber eval_at(const LaurentPolynomial& p, const RootOfUnity& xi) {
  const long q = xi.q();
  std::vector<Rational> powers(static_cast<std::size_t>(q));
  if (!p.is_zero()) {
    for (long k = p.lowest_degree(); k <= p.highest_degree(); ++k) {
      const Integer c = p.coefficient(k);
      if (sgn(c) == 0) continue;
      long e = (xi.p() * (k % q)) % q;
      if (e < 0) e += q;
      powers[static_cast<std::size_t>(e)] += c;
    }
  }
  return CyclotomicNumber::from_powers(q, powers);
}

// ---------------------------------------------------------------- matrices

CycloMatrix to_cyclo(const IntMatrix& m, long q) {
  CycloMatrix out(m.rows(), std::vector<CyclotomicNumber>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = CyclotomicNumber(q, Rational(m(i, j)));
  return out;
}

CycloMatrix cyclo_conjugate_transpose(const CycloMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  CycloMatrix out(cols, std::vector<CyclotomicNumber>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j].conjugate();
  return out;
}

CycloMatrix cyclo_multiply(const CycloMatrix& a, const CycloMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = n == 0 ? b.size() : a[0].size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  if (b.size() != k) throw DimensionError("cyclo_multiply: shape mismatch");
  if (n == 0 || m == 0) return CycloMatrix(n, std::vector<CyclotomicNumber>(m));
  const long q = k > 0 ? a[0][0].modulus() : 0;
  CycloMatrix out(n, std::vector<CyclotomicNumber>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      CyclotomicNumber s(q == 0 ? 1 : q);
      for (std::size_t t = 0; t < k; ++t) {
        if (a[i][t].is_zero() || b[t][j].is_zero()) continue;
        s = s + a[i][t] * b[t][j];
      }
      out[i][j] = std::move(s);
    }
  }
  return out;
}

namespace {

long common_modulus(const CycloMatrix& m) {
  long q = 0;
  for (const auto& row : m) {
    for (const auto& e : row) {
      if (q == 0) q = e.modulus();
      else if (e.modulus() != q) {
        throw std::invalid_argument("matrix over Q(zeta) has mixed moduli " +
                                    std::to_string(q) + " and " +
                                    std::to_string(e.modulus()));
      }
    }
  }
  return q;
}

// Row reduces in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(CycloMatrix& a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const CyclotomicNumber inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a[r][j].is_zero()) a[r][j] = a[r][j] * inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const CyclotomicNumber f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] = a[i][j] - f * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t cyclo_rank(const CycloMatrix& m) {
  common_modulus(m);
  CycloMatrix a = m;
  return rref(a).size();
}

std::vector<std::vector<CyclotomicNumber>> cyclo_nullspace(const CycloMatrix& m,
                                                           std::size_t cols,
                                                           long q) {
  long mq = common_modulus(m);
  if (mq != 0 && mq != q) {
    throw std::invalid_argument("cyclo_nullspace: modulus mismatch");
  }
  for (const auto& row : m) {
    if (row.size() != cols) throw DimensionError("cyclo_nullspace: ragged matrix");
  }
  CycloMatrix a = m;
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<CyclotomicNumber>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CyclotomicNumber> v(cols, CyclotomicNumber(q));
    v[free] = CyclotomicNumber(q, Rational(1));
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

CyclotomicNumber cyclo_det(const CycloMatrix& m, long q) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionError("cyclo_det: matrix not square");
  }
  long mq = common_modulus(m);
  if (mq != 0 && mq != q) throw std::invalid_argument("cyclo_det: modulus mismatch");
  CycloMatrix a = m;
  CyclotomicNumber det(q, Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return CyclotomicNumber(q);
    if (piv != k) {
      std::swap(a[k], a[piv]);
      det = -det;
    }
    det = det * a[k][k];
    const CyclotomicNumber inv = a[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const CyclotomicNumber f = a[i][k] * inv;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!a[k][j].is_zero()) a[i][j] = a[i][j] - f * a[k][j];
      }
    }
  }
  return det;
}

// ---------------------------------------------------------------- signs

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Returns -1, +1, or 0 when the enclosure still contains zero.
int interval_sign(long q, const std::vector<Integer>& numerators,
                  mpfr_prec_t prec) {
  Mpfr pi_lo(prec), pi_hi(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  Mpfr sum_lo(prec), sum_hi(prec);
  mpfr_set_zero(sum_lo.get(), 1);
  mpfr_set_zero(sum_hi.get(), 1);
  Mpfr a_lo(prec), a_hi(prec), mid(prec), rad(prec), c_lo(prec), c_hi(prec),
      t_lo(prec), t_hi(prec);
  for (std::size_t k = 0; k < numerators.size(); ++k) {
    const Integer& n = numerators[k];
    if (sgn(n) == 0) continue;
    // angle = 2 pi k / q enclosed in [a_lo, a_hi]
    const unsigned long two_k = 2UL * k;
    mpfr_mul_ui(a_lo.get(), pi_lo.get(), two_k, MPFR_RNDD);
    mpfr_div_ui(a_lo.get(), a_lo.get(), static_cast<unsigned long>(q), MPFR_RNDD);
    mpfr_mul_ui(a_hi.get(), pi_hi.get(), two_k, MPFR_RNDU);
    mpfr_div_ui(a_hi.get(), a_hi.get(), static_cast<unsigned long>(q), MPFR_RNDU);
    // |cos a - cos mid| <= |a - mid| <= rad for a in the enclosure.
    mpfr_add(mid.get(), a_lo.get(), a_hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    Mpfr r1(prec), r2(prec);
    mpfr_sub(r1.get(), mid.get(), a_lo.get(), MPFR_RNDU);
    mpfr_sub(r2.get(), a_hi.get(), mid.get(), MPFR_RNDU);
    mpfr_max(rad.get(), r1.get(), r2.get(), MPFR_RNDU);
    mpfr_cos(c_lo.get(), mid.get(), MPFR_RNDD);
    mpfr_cos(c_hi.get(), mid.get(), MPFR_RNDU);
    mpfr_sub(c_lo.get(), c_lo.get(), rad.get(), MPFR_RNDD);
    mpfr_add(c_hi.get(), c_hi.get(), rad.get(), MPFR_RNDU);
    if (sgn(n) > 0) {
      mpfr_mul_z(t_lo.get(), c_lo.get(), n.get_mpz_t(), MPFR_RNDD);
      mpfr_mul_z(t_hi.get(), c_hi.get(), n.get_mpz_t(), MPFR_RNDU);
    } else {
      mpfr_mul_z(t_lo.get(), c_hi.get(), n.get_mpz_t(), MPFR_RNDD);
      mpfr_mul_z(t_hi.get(), c_lo.get(), n.get_mpz_t(), MPFR_RNDU);
    }
    mpfr_add(sum_lo.get(), sum_lo.get(), t_lo.get(), MPFR_RNDD);
    mpfr_add(sum_hi.get(), sum_hi.get(), t_hi.get(), MPFR_RNDU);
  }
  if (mpfr_sgn(sum_lo.get()) > 0) return 1;
  if (mpfr_sgn(sum_hi.get()) < 0) return -1;
  return 0;
}

}  // namespace

Sign certified_sign(const CyclotomicNumber& z, long max_bits) {
  if (!(z.conjugate() == z)) {
    throw std::invalid_argument("certified_sign: input is not real (" +
                                z.to_string() + ")");
  }
  if (z.is_zero()) return Sign::kZero;
  // Clear denominators; a positive common multiple keeps the sign.
  Integer den = 1;
  for (const auto& c : z.residue()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> num;
  for (const auto& c : z.residue()) {
    Rational scaled = c * den;
    num.push_back(scaled.get_num());
  }
  // z is real, so z = Re z = sum_k c_k cos(2 pi k / q).
  for (long bits = 64; bits <= max_bits; bits *= 2) {
    int s = interval_sign(z.modulus(), num, static_cast<mpfr_prec_t>(bits));
    if (s > 0) return Sign::kPositive;
    if (s < 0) return Sign::kNegative;
  }
  throw PrecisionError("certified_sign: sign of " + z.to_string() +
                       " undecided at " + std::to_string(max_bits) + " bits");
}

HermitianInertia hermitian_inertia(const CycloMatrix& h, long q) {
  const std::size_t n = h.size();
  for (const auto& row : h) {
    if (row.size() != n) throw DimensionError("hermitian_inertia: not square");
  }
  long mq = common_modulus(h);
  if (mq != 0 && mq != q) {
    throw std::invalid_argument("hermitian_inertia: modulus mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!(h[j][i] == h[i][j].conjugate())) {
        throw std::invalid_argument("hermitian_inertia: matrix is not hermitian");
      }
    }
  }
  CycloMatrix a = h;
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  HermitianInertia out;
  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(),
                             [&](std::size_t i) { return !a[i][i].is_zero(); });
    if (diag != live.end()) {
      const std::size_t p = *diag;
      Sign s = certified_sign(a[p][p]);
      (s == Sign::kPositive ? out.r_plus : out.r_minus) += 1;
      live.erase(diag);
      const CyclotomicNumber inv = a[p][p].inverse();
      for (std::size_t i : live) {
        if (a[i][p].is_zero()) continue;
        const CyclotomicNumber f = a[i][p] * inv;
        for (std::size_t j : live) {
          if (!a[p][j].is_zero()) a[i][j] = a[i][j] - f * a[p][j];
        }
      }
      continue;
    }
    std::size_t p = 0, r = 0;
    bool found = false;
    for (std::size_t x = 0; x < live.size() && !found; ++x) {
      for (std::size_t y = x + 1; y < live.size(); ++y) {
        if (!a[live[x]][live[y]].is_zero()) {
          p = live[x];
          r = live[y];
          found = true;
          break;
        }
      }
    }
    if (!found) {
      out.nullity += live.size();
      break;
    }
    // [[0, b], [conj b, 0]] has eigenvalues +-|b|.
    out.r_plus += 1;
    out.r_minus += 1;
    live.erase(std::remove(live.begin(), live.end(), p), live.end());
    live.erase(std::remove(live.begin(), live.end(), r), live.end());
    const CyclotomicNumber inv_b = a[p][r].inverse();
    const CyclotomicNumber inv_bbar = inv_b.conjugate();
    for (std::size_t i : live) {
      const CyclotomicNumber& xp = a[i][p];
      const CyclotomicNumber& xr = a[i][r];
      if (xp.is_zero() && xr.is_zero()) continue;
      const CyclotomicNumber u = xr * inv_b;
      const CyclotomicNumber w = xp * inv_bbar;
      for (std::size_t j : live) {
        a[i][j] = a[i][j] - (u * a[p][j] + w * a[r][j]);
      }
    }
  }
  return out;
}

}  // namespace cobord
