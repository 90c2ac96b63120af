#include <doctest.h>

#include "cobord/chain.hpp"
#include "cobord/errors.hpp"
#include "cobord/io.hpp"
#include "cobord/random.hpp"
#include "test_util.hpp"

using namespace cobord;

namespace {

ChainComplex z_at(int r) { return ChainComplex::concentrated(r, 1); }

ChainMap times(const ChainComplex& c, long k, int r) {
  return ChainMap(c, c, {{r, IntMatrix{{k}}}});
}

std::size_t betti(const ChainComplex& c, int r) { return c.homology(r).free_rank; }

// Rank over Q of H_r(f): H_r(C) -> H_r(D).
std::size_t induced_rank(const ChainMap& f, int r) {
  const ChainComplex& c = f.source();
  const ChainComplex& d = f.target();
  const IntMatrix cycles = kernel_basis(c.d(r));
  const IntMatrix bd = d.d(r + 1);
  const IntMatrix image = f.at(r) * cycles;
  const std::size_t both = oracle::rank_q(testutil::to_z(IntMatrix::hstack(bd, image)));
  return both - oracle::rank_q(testutil::to_z(bd));
}

}  // namespace

TEST_CASE("complex construction rejects d^2 != 0") {
  CHECK_THROWS_AS(ChainComplex(0, {1, 1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}}),
                  ChainError);
  const ChainComplex c(0, {1, 1}, {IntMatrix{{2}}});
  CHECK_THROWS_AS(ChainMap(c, c, {{0, IntMatrix{{1}}}}), ChainError);
}

TEST_CASE("cone worked values") {
  SUBCASE("identity cone is acyclic") {
    const ChainComplex c(0, {1, 1}, {IntMatrix{{3}}});
    CHECK(is_acyclic(cone(ChainMap::identity(c))));
  }
  SUBCASE("zero map splits") {
    const ChainComplex c(0, {1, 1}, {IntMatrix{{2}}});
    const ChainComplex d = z_at(0);
    const ChainComplex k = cone(ChainMap::zero(c, d));
    for (int r = -1; r <= 3; ++r) {
      const AbelianGroup hd = d.homology(r);
      const AbelianGroup hc = c.homology(r - 1);
      AbelianGroup sum{hd.free_rank + hc.free_rank, hc.torsion};
      CHECK(k.homology(r) == sum);
    }
  }
  SUBCASE("times two") {
    const ChainComplex k = cone(times(z_at(0), 2, 0));
    CHECK(k.homology(0).to_string() == "Z/2");
    CHECK(k.homology(1).is_zero());
  }
}

TEST_CASE("dual worked values") {
  const ChainComplex p = dual(z_at(0), 2);
  CHECK(p.rank(2) == 1);
  CHECK(p.total_rank() == 1);
  const ChainComplex c(0, {1, 1}, {IntMatrix{{3}}});
  const ChainComplex cd = dual(c, 1);
  // (C^{1-*})_r = Hom(C_{1-r}); d_1 = (-1)^1 (d_1)^T.
  CHECK(cd.rank(0) == 1);
  CHECK(cd.rank(1) == 1);
  CHECK(cd.d(1) == IntMatrix{{-3}});
  InstanceGenerator g(9);
  for (int trial = 0; trial < 30; ++trial) {
    const ChainComplex x = g.complex(0, 3, 4, 4);
    const ChainComplex xx = dual(dual(x, 3), 3);
    for (int r = -1; r <= 4; ++r) CHECK(xx.rank(r) == x.rank(r));
    CHECK(xx.homology() == x.homology());
  }
}

TEST_CASE("union worked values") {
  const ChainComplex c = z_at(0);
  SUBCASE("empty glue") {
    const ChainComplex zero;
    const ChainComplex d(0, {1, 1}, {IntMatrix{{2}}});
    const ChainComplex u = union_of(ChainMap::zero(zero, d), ChainMap::zero(zero, z_at(0)));
    CHECK(u.homology(0) == AbelianGroup{1, {Integer(2)}});
  }
  SUBCASE("D = D' = C with identities") {
    const ChainComplex u = union_of(ChainMap::identity(c), ChainMap::identity(c));
    CHECK(u.homology(0).to_string() == "Z");
    CHECK(u.homology(1).is_zero());
  }
  SUBCASE("circle from two intervals glued along two points") {
    const ChainComplex two = ChainComplex::concentrated(0, 2);
    const ChainComplex pt = z_at(0);
    const ChainMap f(two, pt, {{0, IntMatrix{{1, 1}}}});
    const ChainComplex u = union_of(f, f);
    CHECK(u.homology(0).to_string() == "Z");
    CHECK(u.homology(1).to_string() == "Z");
  }
}

TEST_CASE("quasi-isomorphism worked values") {
  const ChainComplex c(0, {1, 1}, {IntMatrix{{2}}});
  CHECK(is_quasi_iso(ChainMap::identity(c)));
  CHECK_FALSE(is_quasi_iso(times(z_at(0), 2, 0)));
  // Inclusion of C into C + (Z -1-> Z).
  const ChainComplex acyc(0, {1, 1}, {IntMatrix{{1}}});
  CHECK(is_quasi_iso(inclusion(c, acyc, 0)));
  CHECK_FALSE(is_quasi_iso(inclusion(c, c, 0)));
}

TEST_CASE("half-handle worked values") {
  SUBCASE("identity d is acyclic") {
    const ChainComplex plus = z_at(1);
    const ChainComplex minus = z_at(0);
    const HalfHandleData h(plus, minus, ChainMap(plus, shift(minus, -1), {{1, IntMatrix{{1}}}}));
    CHECK(is_acyclic(half_handle_complex(h)));
    CHECK(is_H_cobordism(h));
  }
  SUBCASE("zero d") {
    const int r = 0;
    const ChainComplex plus = z_at(r + 1);
    const ChainComplex minus = z_at(r);
    const HalfHandleData h(plus, minus, ChainMap::zero(plus, shift(minus, -1)));
    const ChainComplex c = half_handle_complex(h);
    CHECK(c.homology(r + 1).to_string() == "Z");
    CHECK(c.homology(r).to_string() == "Z");
    CHECK_FALSE(is_H_cobordism(h));
  }
  SUBCASE("times two") {
    const int r = 0;
    const ChainComplex plus = z_at(r + 1);
    const ChainComplex minus = z_at(r);
    const HalfHandleData h(plus, minus,
                           ChainMap(plus, shift(minus, -1), {{r + 1, IntMatrix{{2}}}}));
    const ChainComplex c = half_handle_complex(h);
    CHECK(c.homology(r).to_string() == "Z/2");
    CHECK(c.homology(r + 1).is_zero());
    CHECK_FALSE(is_H_cobordism(h));
  }
  SUBCASE("unimodular d in one degree") {
    const ChainComplex plus = ChainComplex::concentrated(0, 2);
    const ChainComplex minus = ChainComplex::concentrated(-1, 2);
    const HalfHandleData h(plus, minus,
                           ChainMap(plus, shift(minus, -1), {{0, IntMatrix{{2, 1}, {1, 1}}}}));
    CHECK(is_H_cobordism(h));
  }
}

TEST_CASE("cone long exact sequence") {
  InstanceGenerator g(77);
  for (int trial = 0; trial < 60; ++trial) {
    const ChainComplex c = g.complex(0, 2, 3, 3);
    const ChainMap f = g.chain_map_from(c, 3);
    const ChainComplex& d = f.target();
    const ChainComplex k = cone(f);
    CHECK(k.euler_characteristic() == d.euler_characteristic() - c.euler_characteristic());
    // Exactness over Q: b_r(cone) = dim coker H_r(f) + dim ker H_{r-1}(f).
    for (int r = -1; r <= 4; ++r) {
      const std::size_t coker = betti(d, r) - induced_rank(f, r);
      const std::size_t ker = betti(c, r - 1) - induced_rank(f, r - 1);
      CHECK(betti(k, r) == coker + ker);
    }
  }
}

TEST_CASE("union symmetry and half-handle euler characteristic") {
  InstanceGenerator g(13);
  for (int trial = 0; trial < 30; ++trial) {
    const RelativeCobordismTriad t = g.triad(0, 1, 3);
    CHECK(union_of(t.b_c, t.b_e).homology() == union_of(t.b_e, t.b_c).homology());
    const HalfHandleData h = g.half_handle(0, 2, 3);
    CHECK(half_handle_complex(h).euler_characteristic() ==
          h.c_plus.euler_characteristic() + h.c_minus.euler_characteristic());
  }
}

TEST_CASE("triad splitting worked values") {
  SUBCASE("all zero") {
    RelativeCobordismTriad t;
    const TriadSplitting s = split_triad(t);
    CHECK(s.all_certified());
    CHECK(is_acyclic(s.c2));
    CHECK(is_acyclic(s.b2));
  }
  SUBCASE("closed shape") {
    const TriadSplitting s =
        split_triad(parse_triad(read_file(COBORD_DATA_DIR "/closed.triad")));
    CHECK(s.all_certified());
    CHECK(s.c2.homology(-1).to_string() == "Z");
    CHECK(s.b2.homology(-1).to_string() == "Z^2");
  }
  SUBCASE("product triad") {
    const ChainComplex c(0, {1, 2}, {IntMatrix{{2, 0}}});
    RelativeCobordismTriad t;
    t.c = c;
    t.d = c;
    t.c_d = ChainMap::identity(c);
    t.b_c = ChainMap::zero(t.b, t.c);
    t.b_e = ChainMap::zero(t.b, t.e);
    t.bp_cp = ChainMap::zero(t.bp, t.cp);
    t.bp_e = ChainMap::zero(t.bp, t.e);
    t.cp_d = ChainMap::zero(t.cp, t.d);
    t.e_d = ChainMap::zero(t.e, t.d);
    t.validate();
    const TriadSplitting s = split_triad(t);
    CHECK(s.all_certified());
    CHECK(is_acyclic(s.c2));
  }
  SUBCASE("random triads") {
    InstanceGenerator g(2);
    for (int trial = 0; trial < 20; ++trial) CHECK(split_triad(g.triad(0, 1, 3)).all_certified());
  }
}

TEST_CASE("homology string") {
  const ChainComplex c = parse_complex(read_file(COBORD_DATA_DIR "/z2.complex"));
  CHECK(homology_string(c) == "H_0 = Z/2, H_1 = 0");
}
