#include "cobord/chain.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "cobord/errors.hpp"

namespace cobord {
namespace {

int sign_of_degree(int r) { return r % 2 == 0 ? 1 : -1; }

struct Range {
  int lo;
  int hi;  // hi < lo means empty
};

Range range_of(const ChainComplex& c) {
  if (c.empty_range()) return {0, -1};
  return {c.lo(), c.hi()};
}

Range hull(Range a, Range b) {
  if (a.hi < a.lo) return b;
  if (b.hi < b.lo) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Range shifted(Range a, int k) { return {a.lo + k, a.hi + k}; }

ChainComplex build(Range range,
                   const std::function<std::size_t(int)>& rank_at,
                   const std::function<IntMatrix(int)>& d_at) {
  if (range.hi < range.lo) return ChainComplex();
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> diffs;
  for (int r = range.lo; r <= range.hi; ++r) {
    ranks.push_back(rank_at(r));
    if (r > range.lo) diffs.push_back(d_at(r));
  }
  return ChainComplex(range.lo, std::move(ranks), std::move(diffs));
}

std::string degree_tag(int r) { return "degree " + std::to_string(r); }

}  // namespace

ChainComplex::ChainComplex(int lo, std::vector<std::size_t> ranks,
                           std::vector<IntMatrix> diffs)
    : lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  if (ranks_.empty() ? !diffs_.empty() : diffs_.size() + 1 != ranks_.size()) {
    throw DimensionError("chain complex: need one differential per adjacent "
                         "pair of degrees");
  }
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    const IntMatrix& m = diffs_[i];
    if (m.rows() != ranks_[i] || m.cols() != ranks_[i + 1]) {
      throw DimensionError("chain complex: d_" + std::to_string(lo_ + i + 1) +
                           " is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected " +
                           std::to_string(ranks_[i]) + "x" +
                           std::to_string(ranks_[i + 1]));
    }
  }
  for (std::size_t i = 1; i < diffs_.size(); ++i) {
    IntMatrix sq = diffs_[i - 1] * diffs_[i];
    for (std::size_t a = 0; a < sq.rows(); ++a) {
      for (std::size_t b = 0; b < sq.cols(); ++b) {
        if (sgn(sq(a, b)) != 0) {
          throw ChainError("d_" + std::to_string(lo_ + i) + " d_" +
                           std::to_string(lo_ + i + 1) + " != 0 at entry (" +
                           std::to_string(a) + ", " + std::to_string(b) + ")");
        }
      }
    }
  }
}

ChainComplex ChainComplex::concentrated(int r, std::size_t n) {
  return ChainComplex(r, {n}, {});
}

std::size_t ChainComplex::rank(int r) const {
  if (ranks_.empty() || r < lo_ || r > hi()) return 0;
  return ranks_[static_cast<std::size_t>(r - lo_)];
}

std::size_t ChainComplex::total_rank() const {
  std::size_t t = 0;
  for (auto n : ranks_) t += n;
  return t;
}

IntMatrix ChainComplex::d(int r) const {
  if (ranks_.empty() || r <= lo_ || r > hi()) {
    return IntMatrix(rank(r - 1), rank(r));
  }
  return diffs_[static_cast<std::size_t>(r - lo_ - 1)];
}

AbelianGroup ChainComplex::homology(int r) const {
  return homology_at(d(r + 1), d(r));
}

std::map<int, AbelianGroup> ChainComplex::homology() const {
  std::map<int, AbelianGroup> out;
  if (ranks_.empty()) return out;
  for (int r = lo_; r <= hi(); ++r) out[r] = homology(r);
  return out;
}

long ChainComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    long n = static_cast<long>(ranks_[i]);
    chi += sign_of_degree(lo_ + static_cast<int>(i)) * n;
  }
  return chi;
}

bool ChainComplex::operator==(const ChainComplex& o) const {
  Range r = hull(range_of(*this), range_of(o));
  for (int k = r.lo; k <= r.hi; ++k) {
    if (rank(k) != o.rank(k)) return false;
    if (!(d(k) == o.d(k))) return false;
  }
  return true;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target,
                   std::map<int, IntMatrix> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      components_(std::move(components)) {
  for (const auto& [r, m] : components_) {
    if (m.rows() != target_.rank(r) || m.cols() != source_.rank(r)) {
      throw DimensionError("chain map: component in " + degree_tag(r) +
                           " is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected " +
                           std::to_string(target_.rank(r)) + "x" +
                           std::to_string(source_.rank(r)));
    }
  }
  Range range = hull(range_of(source_), range_of(target_));
  for (int r = range.lo; r <= range.hi + 1; ++r) {
    IntMatrix lhs = target_.d(r) * at(r);
    IntMatrix rhs = at(r - 1) * source_.d(r);
    if (!(lhs == rhs)) {
      throw ChainError("chain map condition fails in " + degree_tag(r));
    }
  }
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::map<int, IntMatrix> comps;
  if (!c.empty_range()) {
    for (int r = c.lo(); r <= c.hi(); ++r) comps[r] = IntMatrix::identity(c.rank(r));
  }
  return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  return ChainMap(source, target, {});
}

IntMatrix ChainMap::at(int r) const {
  auto it = components_.find(r);
  if (it != components_.end()) return it->second;
  return IntMatrix(target_.rank(r), source_.rank(r));
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
  if (!(source_ == o.source_) || !(target_ == o.target_)) {
    throw DimensionError("chain map sum: mismatched source or target");
  }
  std::map<int, IntMatrix> comps;
  Range range = hull(range_of(source_), range_of(target_));
  for (int r = range.lo; r <= range.hi; ++r) comps[r] = at(r) + o.at(r);
  return ChainMap(source_, target_, std::move(comps));
}

ChainMap ChainMap::operator-() const {
  std::map<int, IntMatrix> comps;
  for (const auto& [r, m] : components_) comps[r] = -m;
  return ChainMap(source_, target_, std::move(comps));
}

ChainMap ChainMap::operator-(const ChainMap& o) const { return *this + (-o); }

ChainMap ChainMap::after(const ChainMap& f) const {
  if (!(f.target_ == source_)) {
    throw DimensionError("chain map composition: target/source mismatch");
  }
  std::map<int, IntMatrix> comps;
  Range range = range_of(f.source_);
  for (int r = range.lo; r <= range.hi; ++r) comps[r] = at(r) * f.at(r);
  return ChainMap(f.source_, target_, std::move(comps));
}

ChainComplex cone(const ChainMap& f) {
  const ChainComplex& c = f.source();
  const ChainComplex& d = f.target();
  Range range = hull(range_of(d), shifted(range_of(c), 1));
  return build(
      range, [&](int r) { return d.rank(r) + c.rank(r - 1); },
      [&](int r) {
        IntMatrix m(d.rank(r - 1) + c.rank(r - 2), d.rank(r) + c.rank(r - 1));
        m.set_block(0, 0, d.d(r));
        m.set_block(0, d.rank(r), f.at(r - 1).scaled(sign_of_degree(r - 1)));
        m.set_block(d.rank(r - 1), d.rank(r), c.d(r - 1));
        return m;
      });
}

ChainComplex shift(const ChainComplex& c, int k) {
  Range range = shifted(range_of(c), -k);
  return build(
      range, [&](int r) { return c.rank(r + k); },
      [&](int r) { return c.d(r + k); });
}

ChainMap shift(const ChainMap& f, int k) {
  ChainComplex s = shift(f.source(), k);
  ChainComplex t = shift(f.target(), k);
  std::map<int, IntMatrix> comps;
  Range range = range_of(s);
  for (int r = range.lo; r <= range.hi; ++r) comps[r] = f.at(r + k);
  return ChainMap(std::move(s), std::move(t), std::move(comps));
}

ChainComplex dual(const ChainComplex& c, int m) {
  Range src = range_of(c);
  Range range = src.hi < src.lo ? src : Range{m - src.hi, m - src.lo};
  return build(
      range, [&](int r) { return c.rank(m - r); },
      [&](int r) {
        return c.d(m - r + 1).transpose().scaled(sign_of_degree(r));
      });
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  Range range = hull(range_of(a), range_of(b));
  return build(
      range, [&](int r) { return a.rank(r) + b.rank(r); },
      [&](int r) { return IntMatrix::direct_sum(a.d(r), b.d(r)); });
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  ChainComplex s = direct_sum(f.source(), g.source());
  ChainComplex t = direct_sum(f.target(), g.target());
  std::map<int, IntMatrix> comps;
  Range range = hull(range_of(s), range_of(t));
  for (int r = range.lo; r <= range.hi; ++r) {
    comps[r] = IntMatrix::direct_sum(f.at(r), g.at(r));
  }
  return ChainMap(std::move(s), std::move(t), std::move(comps));
}

ChainMap stack(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source())) {
    throw DimensionError("stack: maps have different sources");
  }
  ChainComplex t = direct_sum(f.target(), g.target());
  std::map<int, IntMatrix> comps;
  Range range = range_of(f.source());
  for (int r = range.lo; r <= range.hi; ++r) {
    comps[r] = IntMatrix::vstack(f.at(r), g.at(r));
  }
  return ChainMap(f.source(), std::move(t), std::move(comps));
}

ChainMap juxtapose(const ChainMap& f, const ChainMap& g) {
  if (!(f.target() == g.target())) {
    throw DimensionError("juxtapose: maps have different targets");
  }
  ChainComplex s = direct_sum(f.source(), g.source());
  std::map<int, IntMatrix> comps;
  Range range = range_of(s);
  for (int r = range.lo; r <= range.hi; ++r) {
    comps[r] = IntMatrix::hstack(f.at(r), g.at(r));
  }
  return ChainMap(std::move(s), f.target(), std::move(comps));
}

ChainMap projection(const ChainComplex& a, const ChainComplex& b, int which) {
  ChainComplex sum = direct_sum(a, b);
  const ChainComplex& target = which == 0 ? a : b;
  std::map<int, IntMatrix> comps;
  Range range = range_of(sum);
  for (int r = range.lo; r <= range.hi; ++r) {
    IntMatrix m(target.rank(r), sum.rank(r));
    std::size_t offset = which == 0 ? 0 : a.rank(r);
    for (std::size_t i = 0; i < target.rank(r); ++i) m(i, offset + i) = 1;
    comps[r] = std::move(m);
  }
  return ChainMap(std::move(sum), target, std::move(comps));
}

ChainMap inclusion(const ChainComplex& a, const ChainComplex& b, int which) {
  ChainComplex sum = direct_sum(a, b);
  const ChainComplex& source = which == 0 ? a : b;
  std::map<int, IntMatrix> comps;
  Range range = range_of(sum);
  for (int r = range.lo; r <= range.hi; ++r) {
    IntMatrix m(sum.rank(r), source.rank(r));
    std::size_t offset = which == 0 ? 0 : a.rank(r);
    for (std::size_t i = 0; i < source.rank(r); ++i) m(offset + i, i) = 1;
    comps[r] = std::move(m);
  }
  return ChainMap(source, std::move(sum), std::move(comps));
}

ChainComplex union_of(const ChainMap& f, const ChainMap& f_prime) {
  return cone(stack(f, f_prime));
}

bool is_acyclic(const ChainComplex& c) {
  if (c.empty_range()) return true;
  for (int r = c.lo(); r <= c.hi(); ++r) {
    if (!c.homology(r).is_zero()) return false;
  }
  return true;
}

bool is_quasi_iso(const ChainMap& f) { return is_acyclic(cone(f)); }

HalfHandleData::HalfHandleData(ChainComplex plus, ChainComplex minus,
                               ChainMap map)
    : c_plus(std::move(plus)), c_minus(std::move(minus)), d(std::move(map)) {
  if (!(d.source() == c_plus) || !(d.target() == shift(c_minus, -1))) {
    throw DimensionError(
        "half-handle data: d must map C+ to C- shifted down by one");
  }
}

ChainComplex half_handle_complex(const HalfHandleData& h) {
  const ChainComplex& cp = h.c_plus;
  const ChainComplex& cm = h.c_minus;
  Range range = hull(range_of(cp), range_of(cm));
  return build(
      range, [&](int r) { return cp.rank(r) + cm.rank(r); },
      [&](int r) {
        IntMatrix m(cp.rank(r - 1) + cm.rank(r - 1), cp.rank(r) + cm.rank(r));
        m.set_block(0, 0, cp.d(r));
        // d_r : C+_r -> C-_{r-1}
        m.set_block(cp.rank(r - 1), 0, h.d.at(r).scaled(sign_of_degree(r)));
        m.set_block(cp.rank(r - 1), cp.rank(r), cm.d(r));
        return m;
      });
}

bool is_H_cobordism(const HalfHandleData& h) { return is_quasi_iso(h.d); }

void RelativeCobordismTriad::validate() const {
  struct Check {
    const ChainMap& map;
    const ChainComplex& source;
    const ChainComplex& target;
    const char* name;
  };
  const Check checks[] = {
      {b_c, b, c, "B->C"},     {b_e, b, e, "B->E"},   {bp_cp, bp, cp, "B'->C'"},
      {bp_e, bp, e, "B'->E"}, {c_d, c, d, "C->D"},   {cp_d, cp, d, "C'->D"},
      {e_d, e, d, "E->D"},
  };
  for (const auto& ch : checks) {
    if (!(ch.map.source() == ch.source) || !(ch.map.target() == ch.target)) {
      throw DimensionError(std::string("triad: map ") + ch.name +
                           " has the wrong source or target");
    }
  }
  Range rb = range_of(b);
  for (int r = rb.lo; r <= rb.hi; ++r) {
    if (!(c_d.at(r) * b_c.at(r) == e_d.at(r) * b_e.at(r))) {
      throw ChainError("triad: square B->C->D vs B->E->D fails in " +
                       degree_tag(r));
    }
  }
  Range rbp = range_of(bp);
  for (int r = rbp.lo; r <= rbp.hi; ++r) {
    if (!(cp_d.at(r) * bp_cp.at(r) == e_d.at(r) * bp_e.at(r))) {
      throw ChainError("triad: square B'->C'->D vs B'->E->D fails in " +
                       degree_tag(r));
    }
  }
}

namespace {

/// Fib(g)_r = Y_{r+1} + X_r.
ChainComplex fiber(const ChainMap& g) { return shift(cone(g), 1); }

/// Map of fibers induced by a strictly commuting square b g = g' a.
ChainMap fiber_map(const ChainMap& g, const ChainMap& g_prime,
                   const ChainMap& a, const ChainMap& b) {
  ChainComplex src = fiber(g);
  ChainComplex tgt = fiber(g_prime);
  std::map<int, IntMatrix> comps;
  Range range = range_of(src);
  for (int r = range.lo; r <= range.hi; ++r) {
    comps[r] = IntMatrix::direct_sum(b.at(r + 1), a.at(r));
  }
  return ChainMap(std::move(src), std::move(tgt), std::move(comps));
}

/// Chain map from union cone((f1; f2): B -> X1 + X2) to Z given by
/// (u1, u2, w) -> p1 u1 - p2 u2. Requires p1 f1 = p2 f2 strictly.
ChainMap union_comparison(const ChainMap& f1, const ChainMap& f2,
                          const ChainMap& p1, const ChainMap& p2) {
  ChainComplex u = union_of(f1, f2);
  const ChainComplex& z = p1.target();
  std::map<int, IntMatrix> comps;
  Range range = range_of(u);
  for (int r = range.lo; r <= range.hi; ++r) {
    IntMatrix m(z.rank(r), u.rank(r));
    m.set_block(0, 0, p1.at(r));
    m.set_block(0, p1.source().rank(r), -p2.at(r));
    comps[r] = std::move(m);
  }
  return ChainMap(std::move(u), z, std::move(comps));
}

}  // namespace

TriadSplitting split_triad(const RelativeCobordismTriad& t) {
  t.validate();
  TriadSplitting s;

  const ChainComplex& c = t.c;
  const ChainComplex& cp = t.cp;
  const ChainComplex& e = t.e;
  const ChainComplex& d = t.d;

  // g'' : C + C' -> D,  (x, x') -> i_C x - i_C' x'
  ChainMap g_c2 = juxtapose(t.c_d, -t.cp_d);
  // g- : C + E -> D,  (x, y) -> i_C x - i_E y
  ChainMap g_minus = juxtapose(t.c_d, -t.e_d);
  // g+ : E + C' -> D,  (y, x') -> i_E y - i_C' x'
  ChainMap g_plus = juxtapose(t.e_d, -t.cp_d);

  ChainComplex ce = direct_sum(c, e);
  ChainComplex ecp = direct_sum(e, cp);
  ChainComplex cecp = direct_sum(ce, cp);
  ChainComplex dd = direct_sum(d, d);

  // G : C + E + C' -> D + D, (x, y, x') -> (i_C x - i_E y, i_E y - i_C' x')
  ChainMap big = stack(juxtapose(g_minus, ChainMap::zero(cp, d)),
                       juxtapose(juxtapose(ChainMap::zero(c, d), t.e_d),
                                 -t.cp_d));

  s.c2 = fiber(g_c2);
  s.b2 = fiber(big);
  s.e_minus = fiber(g_minus);
  s.e_plus = fiber(g_plus);

  ChainMap pr_ce = projection(ce, cp, 0);
  ChainMap pr_cp = projection(ce, cp, 1);
  ChainMap pr_c = projection(c, e, 0).after(pr_ce);
  ChainMap pr_e = projection(c, e, 1).after(pr_ce);
  ChainMap pr_ecp =
      inclusion(e, cp, 0).after(pr_e) + inclusion(e, cp, 1).after(pr_cp);
  ChainMap pr_ccp =
      inclusion(c, cp, 0).after(pr_c) + inclusion(c, cp, 1).after(pr_cp);

  ChainMap dd_first = projection(d, d, 0);
  ChainMap dd_second = projection(d, d, 1);
  ChainMap dd_sum = dd_first + dd_second;

  s.b2_to_e_minus = fiber_map(big, g_minus, pr_ce, dd_first);
  s.b2_to_e_plus = fiber_map(big, g_plus, pr_ecp, dd_second);
  s.b2_to_c2 = fiber_map(big, g_c2, pr_ccp, dd_sum);

  // Fib(g)_r = Y_{r+1} + X_r; pick out a block of X_r.
  auto pick = [](const ChainComplex& fib, const ChainComplex& y,
                 const ChainComplex& target,
                 const std::function<std::size_t(int)>& offset_in_x) {
    std::map<int, IntMatrix> comps;
    if (!fib.empty_range()) {
      for (int r = fib.lo(); r <= fib.hi(); ++r) {
        IntMatrix m(target.rank(r), fib.rank(r));
        std::size_t base = y.rank(r + 1) + offset_in_x(r);
        for (std::size_t i = 0; i < target.rank(r); ++i) m(i, base + i) = 1;
        comps[r] = std::move(m);
      }
    }
    return ChainMap(fib, target, std::move(comps));
  };

  s.c2_to_c = pick(s.c2, d, c, [](int) { return std::size_t{0}; });
  s.c2_to_cp = pick(s.c2, d, cp, [&](int r) { return c.rank(r); });

  ChainMap em_to_c = pick(s.e_minus, d, c, [](int) { return std::size_t{0}; });
  ChainMap em_to_e = pick(s.e_minus, d, e, [&](int r) { return c.rank(r); });
  ChainMap ep_to_e = pick(s.e_plus, d, e, [](int) { return std::size_t{0}; });
  ChainMap ep_to_cp = pick(s.e_plus, d, cp, [&](int r) { return e.rank(r); });

  // D: cone(p: C'' -> C + C') -> D, (x, delta, x') -> g'' x - delta.
  {
    ChainMap p = stack(s.c2_to_c, s.c2_to_cp);
    ChainComplex u = cone(p);
    std::map<int, IntMatrix> comps;
    if (!u.empty_range()) {
      for (int r = u.lo(); r <= u.hi(); ++r) {
        IntMatrix m(d.rank(r), u.rank(r));
        m.set_block(0, 0, g_c2.at(r));
        const std::size_t off = c.rank(r) + cp.rank(r);
        for (std::size_t i = 0; i < d.rank(r); ++i) m(i, off + i) = -1;
        comps[r] = std::move(m);
      }
    }
    s.d_comparison = ChainMap(std::move(u), d, std::move(comps));
  }
  s.e_comparison =
      union_comparison(s.b2_to_e_minus, s.b2_to_e_plus, em_to_e, ep_to_e);
  s.c_comparison =
      union_comparison(s.b2_to_e_minus, s.b2_to_c2, em_to_c, s.c2_to_c);
  s.cp_comparison =
      union_comparison(s.b2_to_c2, s.b2_to_e_plus, s.c2_to_cp, ep_to_cp);

  s.d_certified = is_quasi_iso(s.d_comparison);
  s.e_certified = is_quasi_iso(s.e_comparison);
  s.c_certified = is_quasi_iso(s.c_comparison);
  s.cp_certified = is_quasi_iso(s.cp_comparison);
  return s;
}

std::string homology_string(const ChainComplex& c) {
  if (c.empty_range()) return "H_* = 0";
  std::ostringstream os;
  for (int r = c.lo(); r <= c.hi(); ++r) {
    if (r > c.lo()) os << ", ";
    os << "H_" << r << " = " << c.homology(r).to_string();
  }
  return os.str();
}

}  // namespace cobord
