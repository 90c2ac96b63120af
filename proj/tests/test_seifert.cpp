#include <doctest.h>

#include <numeric>

#include "cobord/errors.hpp"
#include "cobord/random.hpp"
#include "cobord/seifert.hpp"
#include "test_util.hpp"

using namespace cobord;

namespace {

const SeifertForm kTrefoil(IntMatrix{{-1, 1}, {0, -1}}, 1);

LaurentPolynomial lp(const char* text) { return LaurentPolynomial::parse(text); }

void check_lt_against_oracle(const SeifertForm& s, const RootOfUnity& xi) {
  const LTResult r = lt_invariants(s, xi);
  const oracle::Inertia o = testutil::lt_oracle(s.matrix(), s.epsilon(), xi.p(), xi.q());
  CAPTURE(s.matrix());
  CAPTURE(s.parity());
  CAPTURE(xi.to_string());
  CHECK(static_cast<int>(r.nullity) == o.zero);
  if (s.epsilon() == 1 && xi.q() == 2) {
    CHECK(r.signature == 0);
  } else {
    CHECK(r.signature == o.plus - o.minus);
  }
}

}  // namespace

TEST_CASE("seifert forms must be square") {
  CHECK_THROWS_AS(SeifertForm(IntMatrix(2, 3), 1), DimensionError);
  CHECK(SeifertForm(IntMatrix::zero(1, 1), 3).parity() == 1);
}

TEST_CASE("symmetrization worked values") {
  CHECK(symmetrize(SeifertForm(IntMatrix::zero(2, 2), 1)).gram().is_zero());
  CHECK(symmetrize(kTrefoil).gram() == IntMatrix({{0, 1}, {-1, 0}}));
  const IntMatrix sym{{1, 2}, {2, 3}};
  CHECK(symmetrize(SeifertForm(sym, 0)).gram() == sym.scaled(2));
  InstanceGenerator g(81);
  for (int trial = 0; trial < 50; ++trial) {
    const SeifertForm s = g.seifert(static_cast<std::size_t>(g.uniform(0, 5)),
                                    static_cast<int>(g.uniform(0, 1)), 4);
    const EpsSymmetricForm f = symmetrize(s);
    CHECK(f.epsilon() == s.epsilon());
    CHECK(f.gram() == f.gram().transpose().scaled(s.epsilon()));
  }
}

TEST_CASE("alexander polynomial worked values") {
  CHECK(alexander(SeifertForm(IntMatrix(0, 0), 1)) == 1);
  CHECK(alexander(kTrefoil).to_string() == "1 - t + t^2");
  CHECK(alexander(SeifertForm(IntMatrix::zero(2, 2), 1)).is_zero());
}

TEST_CASE("alexander polynomial matches the leibniz oracle") {
  InstanceGenerator g(82);
  for (int trial = 0; trial < 100; ++trial) {
    const SeifertForm s = g.seifert(static_cast<std::size_t>(g.uniform(0, 5)),
                                    static_cast<int>(g.uniform(0, 1)), 3);
    const std::size_t n = s.dim();
    std::vector<std::vector<oracle::Poly>> m(n, std::vector<oracle::Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = oracle::poly_trim({s.epsilon() * s.matrix()(j, i), s.matrix()(i, j)});
      }
    }
    const oracle::Poly p = oracle::det_poly(m);
    const LaurentPolynomial ref(0, std::vector<Integer>(p.begin(), p.end()));
    CHECK(alexander_raw(s) == ref);
  }
}

TEST_CASE("transpose relation") {
  InstanceGenerator g(83);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = static_cast<std::size_t>(g.uniform(0, 5));
    const SeifertForm s = g.seifert(k, static_cast<int>(g.uniform(0, 1)), 3);
    const SeifertForm t(s.matrix().transpose(), s.parity());
    CHECK(poly_s_equivalent(alexander_raw(t), alexander_raw(s).inverted()));
  }
}

TEST_CASE("s-moves") {
  SUBCASE("column move on the empty form") {
    const SeifertForm e(IntMatrix(0, 0), 1);
    const SeifertForm big = s_enlarge(e, SMove::kColumn, IntMatrix(0, 1));
    CHECK(big.matrix() == IntMatrix({{0, 0}, {1, 0}}));
    CHECK(alexander(big) == 1);
  }
  SUBCASE("enlarge then reduce recovers the trefoil") {
    for (SMove v : {SMove::kColumn, SMove::kRow}) {
      const IntMatrix vec = v == SMove::kColumn ? IntMatrix{{2}, {-1}} : IntMatrix{{3, 1}};
      const SeifertForm big = s_enlarge(kTrefoil, v, vec);
      CHECK(poly_s_equivalent(alexander_raw(big), alexander_raw(kTrefoil)));
      const auto cands = s_reduce_candidates(big);
      CHECK(std::find(cands.begin(), cands.end(), kTrefoil) != cands.end());
    }
  }
  SUBCASE("wrong vector shape") {
    CHECK_THROWS_AS(s_enlarge(kTrefoil, SMove::kColumn, IntMatrix{{1, 1}}), DimensionError);
  }
  SUBCASE("random forms keep normalized alexander") {
    InstanceGenerator g(84);
    for (int trial = 0; trial < 60; ++trial) {
      const auto k = static_cast<std::size_t>(g.uniform(0, 4));
      const SeifertForm s = g.seifert(k, static_cast<int>(g.uniform(0, 1)), 3);
      const SMove v = g.coin() ? SMove::kColumn : SMove::kRow;
      const IntMatrix vec = v == SMove::kColumn ? g.matrix(k, 1, 3) : g.matrix(1, k, 3);
      CHECK(alexander(s_enlarge(s, v, vec)) == alexander(s));
    }
  }
}

TEST_CASE("h-enlargement recognition") {
  const SeifertForm base(IntMatrix{{1}}, 0);
  SeifertEnlargementSpec s{base, 1, 1, IntMatrix{{0}}, IntMatrix{{0}},
                           IntMatrix{{1}}, IntMatrix{{0}}, IntMatrix{{0}}};
  CHECK(is_h_enlargement(s));
  s.x = IntMatrix{{2}};
  CHECK_FALSE(is_h_enlargement(s));
  s.x = IntMatrix{{1, 0}};
  CHECK_THROWS_AS(s.validate(), DimensionError);
}

TEST_CASE("alexander polynomial of an enlargement (signed identity)") {
  InstanceGenerator g(85);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ell = static_cast<std::size_t>(g.uniform(1, 3));
    const SeifertForm base = g.seifert(static_cast<std::size_t>(g.uniform(0, 3)),
                                       static_cast<int>(g.uniform(0, 1)), 3);
    const int eps = base.epsilon();
    const SeifertEnlargementSpec s = g.seifert_enlargement(base, ell, ell, 2);
    LaurentPolynomial expected =
        laurent_det(linear_pencil(s.x, s.y.transpose().scaled(eps))) *
        laurent_det(linear_pencil(s.y, s.x.transpose().scaled(eps))) * alexander_raw(base);
    if (ell % 2 == 1) expected = -expected;
    CHECK(alexander_raw(h_enlarge(s)) == expected);
  }
}

TEST_CASE("levine-tristram worked values") {
  SUBCASE("zero matrix") {
    const SeifertForm z(IntMatrix::zero(3, 3), 1);
    const LTResult r = lt_invariants(z, RootOfUnity(1, 3));
    CHECK(r.nullity == 3);
    CHECK(r.signature == 0);
  }
  SUBCASE("trefoil at -1") {
    const LTResult r = lt_invariants(kTrefoil, RootOfUnity(1, 2));
    CHECK(r.signature == -2);
    CHECK(r.nullity == 0);
    CHECK_FALSE(r.alexander_value_is_zero);
  }
  SUBCASE("trefoil at zeta_6") {
    const LTResult r = lt_invariants(kTrefoil, RootOfUnity(1, 6));
    CHECK(r.nullity == 1);
    CHECK(r.alexander_value_is_zero);
  }
}

TEST_CASE("levine-tristram matches the eigenvalue oracle") {
  InstanceGenerator g(86);
  for (int trial = 0; trial < 120; ++trial) {
    const SeifertForm s = g.seifert(static_cast<std::size_t>(g.uniform(0, 5)),
                                    static_cast<int>(g.uniform(0, 1)), 3);
    const long q = g.uniform(2, 12);
    long p = g.uniform(1, q - 1);
    while (std::gcd(p, q) != 1) p = g.uniform(1, q - 1);
    check_lt_against_oracle(s, RootOfUnity(p, q));
  }
  for (const auto& xi : RootOfUnity::all_up_to(8)) check_lt_against_oracle(kTrefoil, xi);
}

TEST_CASE("enlargement invariance worked values") {
  const RootOfUnity xi(1, 3);
  SUBCASE("h-enlargement is applicable and preserved") {
    InstanceGenerator g(87);
    for (int trial = 0; trial < 40; ++trial) {
      const SeifertForm base = g.seifert(static_cast<std::size_t>(g.uniform(0, 3)),
                                         static_cast<int>(g.uniform(0, 1)), 2);
      const SeifertEnlargementSpec s = g.seifert_h_enlargement(base, 1, 2);
      const EnlargementInvarianceReport r = verify_enlargement_invariance(s, xi);
      if (r.applicable) CHECK(r.preserved);
    }
  }
  SUBCASE("x = y = 0, z = [1]") {
    const SeifertForm base(IntMatrix{{1}}, 0);
    SeifertEnlargementSpec s{base, 1, 1, IntMatrix{{0}}, IntMatrix{{0}},
                             IntMatrix{{0}}, IntMatrix{{0}}, IntMatrix{{1}}};
    const EnlargementInvarianceReport r = verify_enlargement_invariance(s, xi);
    CHECK_FALSE(r.applicable);
    CHECK(r.jump() == r.kernel_form_signature);
  }
  SUBCASE("zero base") {
    const SeifertForm base(IntMatrix(0, 0), 1);
    SeifertEnlargementSpec s{base, 1, 1, IntMatrix(0, 1), IntMatrix(1, 0),
                             IntMatrix{{1}}, IntMatrix{{0}}, IntMatrix{{2}}};
    const EnlargementInvarianceReport r = verify_enlargement_invariance(s, xi);
    const LTResult direct = lt_invariants(h_enlarge(s), xi);
    CHECK(r.sigma_enlarged == direct.signature);
    CHECK(r.nullity_enlarged == direct.nullity);
  }
}

TEST_CASE("murasugi-kawauchi worked values") {
  const SeifertForm zero(IntMatrix(0, 0), 1);
  const MKReport trivial = mk_check(MKInstance{zero, zero, 0, 0, 0, RootOfUnity(1, 2)});
  CHECK(trivial.lhs == 0);
  CHECK(trivial.rhs == 0);
  CHECK(trivial.holds);
  const MKReport same = mk_check(MKInstance{kTrefoil, kTrefoil, 3, 1, 1, RootOfUnity(1, 2)});
  CHECK(same.lhs == 0);
  CHECK(same.holds);
  const MKReport tu = mk_check(MKInstance{kTrefoil, zero, 4, 2, 0, RootOfUnity(1, 2)});
  CHECK(tu.lhs == 2);
  CHECK(tu.rhs == 2);
  CHECK(tu.holds);
  CHECK(tu.slack == 0);
  CHECK_THROWS(mk_check(MKInstance{kTrefoil, SeifertForm(IntMatrix(0, 0), 0), 4, 2, 0,
                                   RootOfUnity(1, 2)}));
}

TEST_CASE("distinguish") {
  const SeifertForm zero(IntMatrix(0, 0), 1);
  const SeifertForm big = s_enlarge(kTrefoil, SMove::kColumn, IntMatrix{{1}, {1}});
  CHECK_FALSE(distinguish(kTrefoil, big, 8).distinguished);
  const DistinguishReport dz = distinguish(kTrefoil, zero, 8);
  CHECK(dz.distinguished);
  CHECK(dz.witness.find("Alexander") != std::string::npos);
  const SeifertForm mirror(-kTrefoil.matrix().transpose(), 1);
  const DistinguishReport dm = distinguish(kTrefoil, mirror, 2);
  CHECK(dm.distinguished);
  CHECK(dm.witness.find("signature") != std::string::npos);
  CHECK(lt_invariants(mirror, RootOfUnity(1, 2)).signature == 2);
}

TEST_CASE("bounded s-equivalence search") {
  const SeifertForm big = s_enlarge(kTrefoil, SMove::kRow, IntMatrix{{1, 0}});
  const auto path = s_equivalence_search(kTrefoil, big);
  REQUIRE(path.has_value());
  CHECK_FALSE(path->empty());
  const SeifertForm zero(IntMatrix(0, 0), 1);
  CHECK_FALSE(s_equivalence_search(kTrefoil, zero, 2, 1, 4, 5000).has_value());
}

TEST_CASE("s-chains keep every invariant") {
  InstanceGenerator g(88);
  const auto roots = RootOfUnity::all_up_to(8);
  for (int trial = 0; trial < 30; ++trial) {
    const SeifertForm s = g.seifert(static_cast<std::size_t>(g.uniform(0, 3)),
                                    static_cast<int>(g.uniform(0, 1)), 2);
    const auto chain = g.s_chain(s, static_cast<int>(g.uniform(1, 6)), 2);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      CHECK(alexander(chain[i]) == alexander(s));
      for (const auto& xi : roots) {
        const LTResult a = lt_invariants(s, xi), b = lt_invariants(chain[i], xi);
        CHECK(a.nullity == b.nullity);
        CHECK(a.signature == b.signature);
      }
    }
  }
}
