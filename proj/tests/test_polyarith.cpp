#include <doctest.h>

#include <numeric>

#include "cobord/cyclotomic.hpp"
#include "cobord/laurent.hpp"
#include "cobord/random.hpp"
#include "test_util.hpp"

using namespace cobord;

namespace {

LaurentPolynomial lp(const char* text) { return LaurentPolynomial::parse(text); }

// Leibniz oracle for det(t a + b), both entries in Z[t].
LaurentPolynomial pencil_det_oracle(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.rows();
  std::vector<std::vector<oracle::Poly>> m(n, std::vector<oracle::Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = oracle::poly_trim({b(i, j), a(i, j)});
  }
  const oracle::Poly p = oracle::det_poly(m);
  return LaurentPolynomial(0, std::vector<Integer>(p.begin(), p.end()));
}

RootOfUnity random_root(InstanceGenerator& g, long q_max) {
  const long q = g.uniform(2, q_max);
  long p = g.uniform(1, q - 1);
  while (std::gcd(p, q) != 1) p = g.uniform(1, q - 1);
  return RootOfUnity(p, q);
}

CyclotomicNumber random_cyclo(InstanceGenerator& g, long q, long bound) {
  std::vector<Rational> c(static_cast<std::size_t>(q));
  for (auto& x : c) {
    x = Rational(g.uniform(-bound, bound), g.uniform(1, 3));
    x.canonicalize();
  }
  return CyclotomicNumber::from_powers(q, c);
}

}  // namespace

TEST_CASE("laurent polynomial basics") {
  CHECK(lp("1 - t + t^2").to_string() == "1 - t + t^2");
  CHECK(lp("-2t^-1 + 3").lowest_degree() == -1);
  CHECK(lp("3*t^2").coefficient(2) == 3);
  CHECK((lp("1 + t") * lp("1 - t")).to_string() == "1 - t^2");
  CHECK(lp("t^2 - 1").divided_exactly(lp("t - 1")) == lp("t + 1"));
  CHECK_THROWS_AS(lp("t^2 + 1").divided_exactly(lp("t - 1")), std::domain_error);
  CHECK(lp("1 + 2t").inverted() == lp("1 + 2t^-1"));
  CHECK(lp("t^3 - t").at_one() == 0);
  CHECK(LaurentPolynomial().to_string() == "0");
}

TEST_CASE("laurent determinant worked values") {
  SUBCASE("1x1") {
    CHECK(laurent_det({{lp("t - 1")}}) == lp("t - 1"));
  }
  SUBCASE("units") {
    CHECK(laurent_det({{lp("t"), 0}, {0, lp("t^-1")}}) == 1);
  }
  SUBCASE("2x2 cofactor") {
    CHECK(laurent_det({{lp("1 - t"), lp("t")}, {-1, lp("1 - t")}}) == lp("t^2 - t + 1"));
  }
  SUBCASE("empty") {
    CHECK(laurent_det({}) == 1);
  }
}

TEST_CASE("laurent determinant matches leibniz oracle") {
  InstanceGenerator g(71);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(g.uniform(0, 5));
    const IntMatrix a = g.matrix(n, n, 4);
    const IntMatrix b = g.matrix(n, n, 4);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(laurent_det(linear_pencil(a, b)) == pencil_det_oracle(a, b));
  }
}

TEST_CASE("s-normalization") {
  CHECK(s_normalize(lp("-t^3 + t^2")) == lp("1 - t"));
  const LaurentPolynomial p = lp("2 - 3t + t^4");
  CHECK(poly_s_equivalent(p, p.shifted(5)));
  CHECK(poly_s_equivalent(lp("t^2 - t + 1"), lp("1 - t + t^2").shifted(-1)));
  CHECK_FALSE(poly_s_equivalent(p, p * 2));
  InstanceGenerator g(72);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Integer> c(static_cast<std::size_t>(g.uniform(1, 5)));
    for (auto& x : c) x = g.uniform(-5, 5);
    c.front() = g.uniform(1, 5);
    c.back() = g.uniform(1, 5);
    const LaurentPolynomial q(g.uniform(-3, 3), c);
    const LaurentPolynomial n = s_normalize(q);
    CHECK(s_normalize(n) == n);
    const LaurentPolynomial moved = q.shifted(g.uniform(-6, 6));
    CHECK(s_normalize(g.coin() ? moved : -moved) == n);
  }
}

TEST_CASE("h-equivalence witness") {
  const LaurentPolynomial p = lp("1 - t + t^2");
  const LaurentPolynomial q = lp("2 - t");  // q(1) = 1
  const LaurentPolynomial p1 = p * q * q.inverted();
  CHECK(verify_h_equivalence_witness(p, p1, q, 1));
  CHECK_FALSE(verify_h_equivalence_witness(p, p1, 1, 1));
}

TEST_CASE("evaluation at roots of unity") {
  CHECK(eval_at(lp("t"), RootOfUnity(1, 2)) == CyclotomicNumber(2, Rational(-1)));
  CHECK(eval_at(lp("t^2 - t + 1"), RootOfUnity(1, 6)).is_zero());
  CHECK(CyclotomicNumber::zeta_power(4, 1).conjugate() == -CyclotomicNumber::zeta_power(4, 1));
  CHECK_THROWS_AS(RootOfUnity(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(RootOfUnity(3, 3), std::invalid_argument);
  CHECK(RootOfUnity(2, 4).to_string() == "1/2");
  CHECK(RootOfUnity::all_up_to(4).size() == 5);
}

TEST_CASE("primitive roots enumeration") {
  const auto roots = RootOfUnity::all_up_to(6);
  std::size_t expected = 0;
  for (long q = 2; q <= 6; ++q) expected += static_cast<std::size_t>(euler_phi(q));
  CHECK(roots.size() == expected);
  for (std::size_t i = 1; i < roots.size(); ++i) {
    CHECK(roots[i - 1].p() * roots[i].q() < roots[i].p() * roots[i - 1].q());
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("eval commutes with the laurent determinant") {
  InstanceGenerator g(73);
  for (int trial = 0; trial < 80; ++trial) {
    const auto n = static_cast<std::size_t>(g.uniform(0, 5));
    const IntMatrix a = g.matrix(n, n, 3);
    const IntMatrix b = g.matrix(n, n, 3);
    const RootOfUnity xi = random_root(g, 12);
    const long q = xi.q();
    const CyclotomicNumber z = CyclotomicNumber::zeta_power(q, xi.p());
    CycloMatrix m(n, std::vector<CyclotomicNumber>(n, CyclotomicNumber(q)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = z.scaled(Rational(a(i, j))) + CyclotomicNumber(q, Rational(b(i, j)));
      }
    }
    CHECK(eval_at(laurent_det(linear_pencil(a, b)), xi) == cyclo_det(m, q));
  }
}

TEST_CASE("cyclotomic rank worked values") {
  CHECK(cyclo_rank(to_cyclo(IntMatrix::zero(2, 3), 5)) == 0);
  CHECK(cyclo_rank(to_cyclo(IntMatrix::identity(3), 7)) == 3);
  const CyclotomicNumber z = CyclotomicNumber::zeta_power(6, 1);
  const CyclotomicNumber one(6, Rational(1));
  CHECK(cyclo_rank({{one, z}, {z.conjugate(), one}}) == 1);
}

TEST_CASE("field operations and conjugation automorphism") {
  InstanceGenerator g(74);
  for (int trial = 0; trial < 200; ++trial) {
    const long q = g.uniform(2, 12);
    const CyclotomicNumber a = random_cyclo(g, q, 5);
    const CyclotomicNumber b = random_cyclo(g, q, 5);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    CHECK(a.conjugate().conjugate() == a);
    CHECK(a * (b + a) == a * b + a * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("certified sign worked values") {
  CHECK(certified_sign(CyclotomicNumber(7)) == Sign::kZero);
  const CyclotomicNumber z6 = CyclotomicNumber::zeta_power(6, 1);
  CHECK(certified_sign(z6 + z6.conjugate()) == Sign::kPositive);
  const CyclotomicNumber z5 = CyclotomicNumber::zeta_power(5, 1);
  const CyclotomicNumber z52 = CyclotomicNumber::zeta_power(5, 2);
  CHECK(certified_sign(z5 + z5.conjugate() + z52 + z52.conjugate()) == Sign::kNegative);
  CHECK_THROWS_AS(certified_sign(z5), std::invalid_argument);
}

TEST_CASE("certified sign agrees with a 200-bit evaluation") {
  InstanceGenerator g(75);
  for (int trial = 0; trial < 2000; ++trial) {
    const long q = g.uniform(2, 12);
    const CyclotomicNumber z = g.real_cyclotomic(q, 6, g.coin(0.1));
    int ref = 0;
    oracle::cos_sum_200(z.residue(), q, &ref);
    const Sign s = certified_sign(z);
    if (z.is_zero()) {
      CHECK(s == Sign::kZero);
    } else {
      CHECK(static_cast<int>(s) == ref);
    }
  }
}

TEST_CASE("hermitian inertia agrees with a complex eigenvalue oracle") {
  InstanceGenerator g(76);
  for (int trial = 0; trial < 150; ++trial) {
    const auto k = static_cast<std::size_t>(g.uniform(0, 5));
    const IntMatrix a = g.matrix(k, k, 3);
    const RootOfUnity xi = random_root(g, 12);
    // (1 - xi) A + (1 - conj xi) A^T is hermitian.
    const long q = xi.q();
    const CyclotomicNumber one(q, Rational(1));
    const CyclotomicNumber z = CyclotomicNumber::zeta_power(q, xi.p());
    CycloMatrix h(k, std::vector<CyclotomicNumber>(k, CyclotomicNumber(q)));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        h[i][j] = (one - z).scaled(Rational(a(i, j))) +
                  (one - z.conjugate()).scaled(Rational(a(j, i)));
      }
    }
    const HermitianInertia hi = hermitian_inertia(h, q);
    const oracle::Inertia o = oracle::hermitian_inertia(testutil::lt_matrix_double(a, -1, xi.p(), q));
    CAPTURE(a);
    CAPTURE(xi.to_string());
    CHECK(static_cast<int>(hi.r_plus) == o.plus);
    CHECK(static_cast<int>(hi.r_minus) == o.minus);
    CHECK(static_cast<int>(hi.nullity) == o.zero);
  }
}
