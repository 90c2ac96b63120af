#include <doctest.h>

#include "cobord/errors.hpp"
#include "cobord/int_matrix.hpp"
#include "cobord/random.hpp"
#include "cobord/smith.hpp"
#include "test_util.hpp"

using namespace cobord;

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  Integer prev = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
    }
    if (i >= d.cols()) continue;
    const Integer x = d(i, i);
    if (x < 0) return false;
    if (x == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (x % prev != 0) return false;
    prev = x;
  }
  return true;
}

bool unimodular(const IntMatrix& m) {
  return m.is_square() && abs(m.determinant()) == 1;
}

}  // namespace

TEST_CASE("smith normal form worked values") {
  SUBCASE("zero 2x2") {
    const auto s = smith_normal_form(IntMatrix::zero(2, 2));
    CHECK(s.d.is_zero());
    CHECK(s.u == IntMatrix::identity(2));
    CHECK(s.v == IntMatrix::identity(2));
    CHECK(s.rank == 0);
  }
  SUBCASE("identity") {
    const auto s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.d == IntMatrix::identity(3));
  }
  SUBCASE("[[2,4],[6,8]]") {
    const IntMatrix m{{2, 4}, {6, 8}};
    const auto s = smith_normal_form(m);
    CHECK(s.d == IntMatrix({{2, 0}, {0, 4}}));
    CHECK(s.u * m * s.v == s.d);
  }
  SUBCASE("empty shapes") {
    const auto s = smith_normal_form(IntMatrix(0, 3));
    CHECK(s.rank == 0);
    CHECK(s.v.rows() == 3);
  }
}

TEST_CASE("smith normal form property: U M V = D, chain, rank, inverses") {
  InstanceGenerator g(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(g.uniform(0, 8));
    const auto c = static_cast<std::size_t>(g.uniform(0, 8));
    IntMatrix m = g.matrix(r, c, 20);
    if (r >= 2 && c >= 1 && g.coin(0.3)) {
      // Force rank deficiency.
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3 - m(1, j);
    }
    const auto s = smith_normal_form(m);
    CAPTURE(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_diagonal_chain(s.d));
    CHECK(unimodular(s.u));
    CHECK(unimodular(s.v));
    CHECK(s.u * s.u_inv == IntMatrix::identity(r));
    CHECK(s.v * s.v_inv == IntMatrix::identity(c));
    CHECK(s.rank == oracle::rank_q(testutil::to_z(m)));
    CHECK(m.rank() == s.rank);
    // Elementary divisors against determinantal divisors.
    if (r <= 5 && c <= 5) {
      const auto ed = oracle::elementary_divisors(testutil::to_z(m));
      const auto inv = s.invariants();
      REQUIRE(ed.size() == inv.size());
      for (std::size_t i = 0; i < ed.size(); ++i) CHECK(ed[i] == inv[i]);
    }
  }
}

TEST_CASE("bareiss determinant matches leibniz expansion") {
  InstanceGenerator g(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(g.uniform(0, 6));
    const IntMatrix m = g.matrix(n, n, 9);
    CHECK(m.determinant() == oracle::det_leibniz(testutil::to_z(m)));
  }
}

TEST_CASE("ragged rows are rejected naming the row") {
  std::vector<std::vector<Integer>> rows{{1, 2}, {3}};
  CHECK_THROWS_WITH_AS(IntMatrix::from_rows(rows), doctest::Contains("row 2"),
                       DimensionError);
}

TEST_CASE("saturation worked values") {
  CHECK(saturation(IntMatrix{{2}, {0}}, 2) == IntMatrix{{1}, {0}});
  CHECK(saturation(IntMatrix{{1}, {0}}, 2) == IntMatrix{{1}, {0}});
  const IntMatrix full = saturation(IntMatrix{{2, 0}, {4, 6}}, 2);
  CHECK(full.cols() == 2);
  CHECK(abs(full.determinant()) == 1);
  CHECK(is_saturated(IntMatrix{{1}, {0}}));
  CHECK_FALSE(is_saturated(IntMatrix{{2}, {0}}));
}

TEST_CASE("saturation property: idempotent, torsion-free quotient, contains input") {
  InstanceGenerator g(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(g.uniform(1, 6));
    const auto k = static_cast<std::size_t>(g.uniform(1, static_cast<long>(n)));
    IntMatrix a = g.matrix(n, k, 6);
    if (a.rank() < k) continue;
    const IntMatrix s = saturation(a, n);
    CAPTURE(a);
    CHECK(s.cols() == k);
    CHECK(is_saturated(s));
    CHECK(cokernel(s).torsion.empty());
    CHECK(saturation(s, n).cols() == s.cols());
    IntMatrix x;
    CHECK(solve_integral(s, a, &x));
    // Same rational span: rank of [s | a] is still k.
    CHECK(IntMatrix::hstack(s, a).rank() == k);
  }
}

TEST_CASE("kernel basis is saturated and spans the kernel") {
  InstanceGenerator g(23);
  for (int trial = 0; trial < 150; ++trial) {
    const auto r = static_cast<std::size_t>(g.uniform(1, 6));
    const auto c = static_cast<std::size_t>(g.uniform(1, 8));
    const IntMatrix m = g.matrix(r, c, 10);
    const IntMatrix k = kernel_basis(m);
    CHECK(k.cols() == c - oracle::rank_q(testutil::to_z(m)));
    CHECK((m * k).is_zero());
    if (k.cols() > 0) CHECK(is_saturated(k));
  }
}

TEST_CASE("homology_at worked values") {
  CHECK(homology_at(IntMatrix{{2}}, IntMatrix(0, 1)).to_string() == "Z/2");
  CHECK(homology_at(IntMatrix::zero(3, 2), IntMatrix::zero(1, 3)) ==
        AbelianGroup{3, {}});
  CHECK(homology_at(IntMatrix{{1}, {1}}, IntMatrix{{1, -1}}).is_zero());
  CHECK((AbelianGroup{2, {Integer(2), Integer(6)}}).to_string() ==
        "Z^2 + Z/2 + Z/6");
}

TEST_CASE("homology_at agrees with rank and elementary-divisor oracles") {
  InstanceGenerator g(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(g.uniform(1, 6));
    const auto s = static_cast<std::size_t>(g.uniform(0, static_cast<long>(n)));
    const auto m_in = static_cast<std::size_t>(g.uniform(0, 4));
    const auto p_out = static_cast<std::size_t>(g.uniform(0, 4));
    IntMatrix p_inv;
    const IntMatrix p = g.unimodular(n, &p_inv, 4);
    IntMatrix top = IntMatrix::zero(n, m_in);
    top.set_block(0, 0, g.matrix(s, m_in, 4));
    IntMatrix right = IntMatrix::zero(p_out, n);
    right.set_block(0, s, g.matrix(p_out, n - s, 4));
    const IntMatrix d_in = p * top;
    const IntMatrix d_out = right * p_inv;
    REQUIRE((d_out * d_in).is_zero());
    const AbelianGroup h = homology_at(d_in, d_out);
    const std::size_t rk_in = oracle::rank_q(testutil::to_z(d_in));
    const std::size_t rk_out = oracle::rank_q(testutil::to_z(d_out));
    CAPTURE(d_in);
    CAPTURE(d_out);
    CHECK(h.free_rank == n - rk_out - rk_in);
    std::vector<Integer> torsion;
    if (d_in.cols() > 0 && n <= 5 && m_in <= 4) {
      for (const auto& e : oracle::elementary_divisors(testutil::to_z(d_in))) {
        if (e > 1) torsion.push_back(e);
      }
      CHECK(h.torsion == torsion);
    }
  }
}

TEST_CASE("induced map modulo torsion") {
  SUBCASE("identity") {
    const Presentation a{2, IntMatrix{{0}, {3}}};
    const IntMatrix f = induced_tf_map(IntMatrix::identity(2), a, a);
    CHECK(f.is_square());
    CHECK(abs(f.determinant()) == 1);
  }
  SUBCASE("Z + Z/2 onto its torsion") {
    const Presentation a{2, IntMatrix{{0}, {2}}};
    const Presentation b{1, IntMatrix{{2}}};
    const IntMatrix f = induced_tf_map(IntMatrix{{0, 1}}, a, b);
    CHECK(f.rows() == 0);
    CHECK(f.is_zero());
  }
  SUBCASE("times two on Z") {
    const IntMatrix f =
        induced_tf_map(IntMatrix{{2}}, Presentation::free(1), Presentation::free(1));
    CHECK(abs(f(0, 0)) == 2);
  }
  SUBCASE("isomorphism modulo torsion stays unimodular") {
    InstanceGenerator g(3);
    for (int trial = 0; trial < 50; ++trial) {
      const auto n = static_cast<std::size_t>(g.uniform(1, 4));
      IntMatrix pinv;
      const IntMatrix p = g.unimodular(n, &pinv, 5);
      // A = Z^n with one torsion summand hidden by a change of basis.
      IntMatrix rel = IntMatrix::zero(n, 1);
      rel(0, 0) = g.uniform(2, 5);
      const Presentation a{n, p * rel};
      const Presentation b{n, rel};
      const IntMatrix f = induced_tf_map(pinv, a, b);
      CHECK(f.is_square());
      CHECK(f.rows() == n - 1);
      CHECK(abs(f.determinant()) == 1);
    }
  }
}

TEST_CASE("lll reduction keeps the lattice") {
  InstanceGenerator g(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(g.uniform(1, 6));
    const auto k = static_cast<std::size_t>(g.uniform(1, static_cast<long>(n)));
    const IntMatrix b = g.matrix(n, k, 50);
    if (b.rank() < k) continue;
    const IntMatrix r = lll_reduce_columns(b);
    IntMatrix x, y;
    CHECK(solve_integral(b, r, &x));
    CHECK(solve_integral(r, b, &y));
  }
}
