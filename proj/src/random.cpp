#include "cobord/random.hpp"

#include <algorithm>
#include <utility>

namespace cobord {

long InstanceGenerator::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

bool InstanceGenerator::coin(double p) {
  return std::bernoulli_distribution(p)(rng_);
}

IntMatrix InstanceGenerator::matrix(std::size_t rows, std::size_t cols,
                                    long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
  }
  return m;
}

IntMatrix InstanceGenerator::unimodular(std::size_t n, IntMatrix* inverse,
                                        int steps) {
  IntMatrix p = IntMatrix::identity(n);
  IntMatrix inv = IntMatrix::identity(n);
  if (steps <= 0) steps = static_cast<int>(2 * n);
  for (int s = 0; s < steps && n > 1; ++s) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const long c = coin() ? 1 : -1;
    // p <- p * (I + c e_ij): column j += c column i.
    for (std::size_t r = 0; r < n; ++r) p(r, j) += c * p(r, i);
    // inv <- (I - c e_ij) * inv: row i -= c row j.
    for (std::size_t r = 0; r < n; ++r) inv(i, r) -= c * inv(j, r);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(0.25)) {
      for (std::size_t r = 0; r < n; ++r) p(r, i) = -p(r, i);
      for (std::size_t r = 0; r < n; ++r) inv(i, r) = -inv(i, r);
    }
  }
  if (inverse != nullptr) *inverse = std::move(inv);
  return p;
}

EpsSymmetricForm InstanceGenerator::form(int epsilon, std::size_t dim,
                                         long bound) {
  IntMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (epsilon == 1) g(i, i) = uniform(-bound, bound);
    for (std::size_t j = i + 1; j < dim; ++j) {
      g(i, j) = uniform(-bound, bound);
      g(j, i) = epsilon * g(i, j);
    }
  }
  return EpsSymmetricForm(epsilon, std::move(g));
}

EnlargementSpec InstanceGenerator::enlargement(const EpsSymmetricForm& base,
                                               std::size_t l_minus,
                                               std::size_t l_plus, long bound) {
  EnlargementSpec s;
  s.base = base;
  s.l_minus = l_minus;
  s.l_plus = l_plus;
  s.c = matrix(base.dim(), l_plus, bound);
  s.d = matrix(l_minus, l_plus, bound);
  s.e = form(base.epsilon(), l_plus, bound).gram();
  return s;
}

EnlargementSpec InstanceGenerator::h_enlargement(const EpsSymmetricForm& base,
                                                 std::size_t l, long bound) {
  EnlargementSpec s = enlargement(base, l, l, bound);
  s.d = unimodular(l);
  return s;
}

SeifertForm InstanceGenerator::seifert(std::size_t k, int parity, long bound) {
  return SeifertForm(matrix(k, k, bound), parity);
}

SeifertEnlargementSpec InstanceGenerator::seifert_enlargement(
    const SeifertForm& base, std::size_t l_minus, std::size_t l_plus,
    long bound) {
  SeifertEnlargementSpec s;
  s.base = base;
  s.l_minus = l_minus;
  s.l_plus = l_plus;
  const std::size_t k = base.dim();
  s.alpha = matrix(k, l_plus, bound);
  s.x = matrix(l_minus, l_plus, bound);
  s.beta = matrix(l_plus, k, bound);
  s.y = matrix(l_plus, l_minus, bound);
  s.z = matrix(l_plus, l_plus, bound);
  return s;
}

SeifertEnlargementSpec InstanceGenerator::seifert_h_enlargement(
    const SeifertForm& base, std::size_t l, long bound) {
  SeifertEnlargementSpec s = seifert_enlargement(base, l, l, bound);
  s.x = unimodular(l) - s.y.transpose().scaled(base.epsilon());
  return s;
}

std::vector<SeifertForm> InstanceGenerator::s_chain(const SeifertForm& start,
                                                    int moves, long bound,
                                                    std::size_t max_dim) {
  std::vector<SeifertForm> chain{start};
  for (int m = 0; m < moves; ++m) {
    const SeifertForm& cur = chain.back();
    const std::size_t k = cur.dim();
    auto reductions = s_reduce_candidates(cur);
    const long pick = uniform(0, 2);
    if (pick == 0 && !reductions.empty()) {
      chain.push_back(reductions[static_cast<std::size_t>(
          uniform(0, static_cast<long>(reductions.size()) - 1))]);
    } else if (pick <= 1 && k + 2 <= max_dim) {
      if (coin()) {
        chain.push_back(s_enlarge(cur, SMove::kColumn, matrix(k, 1, bound)));
      } else {
        chain.push_back(s_enlarge(cur, SMove::kRow, matrix(1, k, bound)));
      }
    } else {
      const IntMatrix p = unimodular(k);
      chain.emplace_back(p.transpose() * cur.matrix() * p, cur.parity());
    }
  }
  return chain;
}

CyclotomicNumber InstanceGenerator::real_cyclotomic(long q, long bound,
                                                    bool zero) {
  std::vector<Rational> c(static_cast<std::size_t>(q));
  for (auto& v : c) {
    v = Rational(uniform(-bound, bound), uniform(1, 3));
    v.canonicalize();
  }
  CyclotomicNumber z = CyclotomicNumber::from_powers(q, c);
  z = z + z.conjugate();
  if (zero) {
    // Times the sum of all q-th roots of unity.
    std::vector<Rational> ones(static_cast<std::size_t>(q), Rational(1));
    z = z * CyclotomicNumber::from_powers(q, ones);
  }
  return z;
}

ChainComplex InstanceGenerator::complex(int lo, int hi, std::size_t max_pieces,
                                        long bound) {
  struct Piece {
    int deg;      // free piece in deg, or Z_{deg+1} -m-> Z_deg
    bool pair;
    long mult;
  };
  std::vector<Piece> pieces;
  const auto n = static_cast<std::size_t>(uniform(0, static_cast<long>(max_pieces)));
  for (std::size_t i = 0; i < n; ++i) {
    const bool pair = hi > lo && coin();
    const int deg = static_cast<int>(uniform(lo, pair ? hi - 1 : hi));
    long mult = 1;
    if (pair) mult = uniform(1, std::max<long>(1, bound)) * (coin() ? 1 : -1);
    pieces.push_back({deg, pair, mult});
  }
  std::vector<std::size_t> ranks(static_cast<std::size_t>(hi - lo + 1), 0);
  // index of each piece's generator(s) within its degree(s)
  std::vector<std::pair<std::size_t, std::size_t>> slot(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto r = static_cast<std::size_t>(pieces[i].deg - lo);
    slot[i].first = ranks[r]++;
    if (pieces[i].pair) slot[i].second = ranks[r + 1]++;
  }
  std::vector<IntMatrix> diffs;
  for (int r = lo + 1; r <= hi; ++r) {
    diffs.emplace_back(ranks[static_cast<std::size_t>(r - 1 - lo)],
                       ranks[static_cast<std::size_t>(r - lo)]);
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!pieces[i].pair) continue;
    diffs[static_cast<std::size_t>(pieces[i].deg - lo)](slot[i].first,
                                                        slot[i].second) =
        pieces[i].mult;
  }
  return isomorph(ChainComplex(lo, std::move(ranks), std::move(diffs))).copy;
}

InstanceGenerator::Isomorph InstanceGenerator::isomorph(const ChainComplex& c) {
  if (c.empty_range()) {
    return {c, ChainMap::identity(c), ChainMap::identity(c)};
  }
  std::map<int, IntMatrix> p, pinv;
  for (int r = c.lo(); r <= c.hi(); ++r) {
    IntMatrix inv;
    p[r] = unimodular(c.rank(r), &inv);
    pinv[r] = std::move(inv);
  }
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> diffs;
  for (int r = c.lo(); r <= c.hi(); ++r) {
    ranks.push_back(c.rank(r));
    if (r > c.lo()) diffs.push_back(p[r - 1] * c.d(r) * pinv[r]);
  }
  ChainComplex copy(c.lo(), std::move(ranks), std::move(diffs));
  ChainMap to(c, copy, p);
  ChainMap from(copy, c, pinv);
  return {std::move(copy), std::move(to), std::move(from)};
}

ChainMap InstanceGenerator::null_homotopic(const ChainComplex& a,
                                           const ChainComplex& b, long bound) {
  if (a.empty_range() || b.empty_range()) return ChainMap::zero(a, b);
  const int lo = std::min(a.lo(), b.lo()) - 1;
  const int hi = std::max(a.hi(), b.hi()) + 1;
  std::map<int, IntMatrix> h;
  for (int r = lo; r <= hi; ++r) h[r] = matrix(b.rank(r + 1), a.rank(r), bound);
  std::map<int, IntMatrix> f;
  for (int r = lo + 1; r <= hi; ++r) {
    if (a.rank(r) == 0 || b.rank(r) == 0) continue;
    f[r] = b.d(r + 1) * h[r] + h[r - 1] * a.d(r);
  }
  return ChainMap(a, b, std::move(f));
}

namespace {

ChainMap times(const ChainMap& f, long k) {
  ChainMap out = ChainMap::zero(f.source(), f.target());
  const ChainMap g = k < 0 ? -f : f;
  for (long i = 0; i < std::labs(k); ++i) out = out + g;
  return out;
}

}  // namespace

ChainMap InstanceGenerator::chain_map_from(const ChainComplex& a, long bound) {
  const Isomorph iso = isomorph(a);
  const int lo = a.empty_range() ? 0 : a.lo();
  const int hi = a.empty_range() ? 1 : a.hi();
  ChainComplex extra = coin() ? ChainComplex() : complex(lo, hi, 2, bound);
  ChainComplex d = direct_sum(iso.copy, extra);
  ChainMap incl = inclusion(iso.copy, extra, 0).after(iso.to);
  const long k = uniform(-1, 2);
  ChainMap f = times(incl, k) + null_homotopic(a, d, 1);
  const Isomorph scramble = isomorph(d);
  return scramble.to.after(f);
}

HalfHandleData InstanceGenerator::half_handle(int lo, int hi, long bound) {
  ChainComplex plus = complex(lo, hi, 3, bound);
  ChainMap f = chain_map_from(plus, bound);
  ChainComplex minus = shift(f.target(), 1);
  return HalfHandleData(std::move(plus), std::move(minus), std::move(f));
}

RelativeCobordismTriad InstanceGenerator::triad(int lo, int hi, long bound) {
  RelativeCobordismTriad t;
  t.b = complex(lo, hi, 2, bound);
  t.bp = complex(lo, hi, 2, bound);
  const ChainMap g = chain_map_from(direct_sum(t.b, t.bp), bound);
  t.e = g.target();
  t.b_e = g.after(inclusion(t.b, t.bp, 0));
  t.bp_e = g.after(inclusion(t.b, t.bp, 1));
  t.e_d = chain_map_from(t.e, bound);
  t.d = t.e_d.target();

  auto side = [&](const ChainComplex& base, const ChainMap& base_to_e,
                  ChainComplex* c, ChainMap* base_to_c, ChainMap* c_to_d) {
    ChainComplex y = complex(lo, hi, 2, bound);
    ChainComplex sum = direct_sum(base, y);
    ChainMap incl = inclusion(base, y, 0);
    ChainMap to_d = juxtapose(t.e_d.after(base_to_e), null_homotopic(y, t.d, 1));
    const Isomorph iso = isomorph(sum);
    *c = iso.copy;
    *base_to_c = iso.to.after(incl);
    *c_to_d = to_d.after(iso.from);
  };
  side(t.b, t.b_e, &t.c, &t.b_c, &t.c_d);
  side(t.bp, t.bp_e, &t.cp, &t.bp_cp, &t.cp_d);
  t.validate();
  return t;
}

}  // namespace cobord
