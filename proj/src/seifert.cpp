#include "cobord/seifert.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "cobord/errors.hpp"

namespace cobord {

SeifertForm::SeifertForm(IntMatrix a, int parity)
    : a_(std::move(a)), parity_(((parity % 2) + 2) % 2) {
  if (!a_.is_square()) {
    throw DimensionError("Seifert matrix must be square, got " +
                         std::to_string(a_.rows()) + "x" +
                         std::to_string(a_.cols()));
  }
}

EpsSymmetricForm symmetrize(const SeifertForm& s) {
  const IntMatrix& a = s.matrix();
  return EpsSymmetricForm(s.epsilon(), a + a.transpose().scaled(s.epsilon()));
}

LaurentPolynomial alexander_raw(const SeifertForm& s) {
  const IntMatrix& a = s.matrix();
  return laurent_det(linear_pencil(a, a.transpose().scaled(s.epsilon())));
}

LaurentPolynomial alexander(const SeifertForm& s) {
  return s_normalize(alexander_raw(s));
}

SeifertForm s_enlarge(const SeifertForm& s, SMove variant,
                      const IntMatrix& vector) {
  const std::size_t k = s.dim();
  IntMatrix out(k + 2, k + 2);
  out.set_block(0, 0, s.matrix());
  if (variant == SMove::kColumn) {
    if (vector.cols() != 1 || vector.rows() != k) {
      if (!(k == 0 && vector.rows() * vector.cols() == 0)) {
        throw DimensionError("column move needs a " + std::to_string(k) +
                             "x1 vector");
      }
    }
    if (k > 0) out.set_block(0, k + 1, vector);
    out(k + 1, k) = 1;
  } else {
    if (vector.rows() != 1 || vector.cols() != k) {
      if (!(k == 0 && vector.rows() * vector.cols() == 0)) {
        throw DimensionError("row move needs a 1x" + std::to_string(k) +
                             " vector");
      }
    }
    if (k > 0) out.set_block(k + 1, 0, vector);
    out(k, k + 1) = 1;
  }
  return SeifertForm(std::move(out), s.parity());
}

std::vector<SeifertForm> s_reduce_candidates(const SeifertForm& s) {
  const IntMatrix& a = s.matrix();
  const std::size_t k = s.dim();
  std::vector<SeifertForm> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(a(i, i)) != 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const Integer& aij = a(i, j);
      const Integer& aji = a(j, i);
      const bool shape = (abs(aij) == 1 && sgn(aji) == 0) ||
                         (sgn(aij) == 0 && abs(aji) == 1);
      if (!shape) continue;
      bool clean = true;
      for (std::size_t m = 0; m < k && clean; ++m) {
        if (m == j) continue;
        if (sgn(a(i, m)) != 0 || sgn(a(m, i)) != 0) clean = false;
      }
      if (!clean) continue;
      std::vector<std::size_t> keep;
      for (std::size_t m = 0; m < k; ++m) {
        if (m != i && m != j) keep.push_back(m);
      }
      SeifertForm cand(a.select_rows(keep).select_columns(keep), s.parity());
      bool seen = false;
      for (const auto& c : out) seen = seen || c == cand;
      if (!seen) out.push_back(std::move(cand));
    }
  }
  return out;
}

namespace {

void check_shape(const IntMatrix& m, std::size_t r, std::size_t c,
                 const char* name) {
  if (m.rows() == r && m.cols() == c) return;
  if (r * c == 0 && m.rows() * m.cols() == 0) return;
  throw DimensionError(std::string("enlargement block ") + name + " must be " +
                       std::to_string(r) + "x" + std::to_string(c) + ", got " +
                       std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()));
}

IntMatrix shaped(const IntMatrix& m, std::size_t r, std::size_t c) {
  return (m.rows() == r && m.cols() == c) ? m : IntMatrix(r, c);
}

}  // namespace

void SeifertEnlargementSpec::validate() const {
  const std::size_t k = base.dim();
  check_shape(alpha, k, l_plus, "alpha");
  check_shape(x, l_minus, l_plus, "x");
  check_shape(beta, l_plus, k, "beta");
  check_shape(y, l_plus, l_minus, "y");
  check_shape(z, l_plus, l_plus, "z");
}

SeifertForm h_enlarge(const SeifertEnlargementSpec& spec) {
  spec.validate();
  const std::size_t k = spec.base.dim();
  const std::size_t lm = spec.l_minus, lp = spec.l_plus;
  IntMatrix out(k + lm + lp, k + lm + lp);
  out.set_block(0, 0, spec.base.matrix());
  out.set_block(0, k + lm, shaped(spec.alpha, k, lp));
  out.set_block(k, k + lm, shaped(spec.x, lm, lp));
  out.set_block(k + lm, 0, shaped(spec.beta, lp, k));
  out.set_block(k + lm, k, shaped(spec.y, lp, lm));
  out.set_block(k + lm, k + lm, shaped(spec.z, lp, lp));
  return SeifertForm(std::move(out), spec.base.parity());
}

bool is_h_enlargement(const SeifertEnlargementSpec& spec) {
  spec.validate();
  if (spec.l_minus != spec.l_plus) return false;
  const std::size_t l = spec.l_plus;
  IntMatrix x = shaped(spec.x, l, l);
  IntMatrix y = shaped(spec.y, l, l);
  const Integer det =
      (x + y.transpose().scaled(spec.base.epsilon())).determinant();
  return abs(det) == 1;
}

CycloMatrix lt_matrix(const SeifertForm& s, const RootOfUnity& xi) {
  const long q = xi.q();
  const std::size_t k = s.dim();
  const CyclotomicNumber one(q, Rational(1));
  const CyclotomicNumber c1 = one - CyclotomicNumber::zeta_power(q, xi.p());
  const CyclotomicNumber c2 =
      (one - CyclotomicNumber::zeta_power(q, q - xi.p())).scaled(
          Rational(-s.epsilon()));
  const IntMatrix& a = s.matrix();
  CycloMatrix b(k, std::vector<CyclotomicNumber>(k, CyclotomicNumber(q)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      b[i][j] = c1.scaled(Rational(a(i, j))) + c2.scaled(Rational(a(j, i)));
    }
  }
  return b;
}

long lt_signature_of(const CycloMatrix& m, int epsilon, long q) {
  if (m.empty()) return 0;
  if (epsilon == -1) return hermitian_inertia(m, q).signature();
  if (q == 2) return 0;
  const CyclotomicNumber lambda =
      CyclotomicNumber::zeta_power(q, 1) - CyclotomicNumber::zeta_power(q, q - 1);
  CycloMatrix h = m;
  for (auto& row : h) {
    for (auto& e : row) e = e * lambda;
  }
  return hermitian_inertia(h, q).signature();
}

LTResult lt_invariants(const SeifertForm& s, const RootOfUnity& xi) {
  LTResult r{xi};
  const CycloMatrix b = lt_matrix(s, xi);
  r.nullity = s.dim() - cyclo_rank(b);
  r.signature = lt_signature_of(b, s.epsilon(), xi.q());
  r.alexander_value_is_zero = eval_at(alexander_raw(s), xi).is_zero();
  return r;
}

EnlargementInvarianceReport verify_enlargement_invariance(
    const SeifertEnlargementSpec& spec, const RootOfUnity& xi) {
  spec.validate();
  const long q = xi.q();
  const int eps = spec.base.epsilon();
  const std::size_t k = spec.base.dim();
  const std::size_t lm = spec.l_minus, lp = spec.l_plus;
  const SeifertForm enlarged = h_enlarge(spec);

  EnlargementInvarianceReport rep;
  const LTResult r0 = lt_invariants(spec.base, xi);
  const LTResult r1 = lt_invariants(enlarged, xi);
  rep.sigma_base = r0.signature;
  rep.sigma_enlarged = r1.signature;
  rep.nullity_base = r0.nullity;
  rep.nullity_enlarged = r1.nullity;
  rep.preserved = r0.signature == r1.signature && r0.nullity == r1.nullity;

  const CyclotomicNumber z = CyclotomicNumber::zeta_power(q, xi.p());
  const CyclotomicNumber e(q, Rational(eps));
  const IntMatrix x = shaped(spec.x, lm, lp);
  const IntMatrix y = shaped(spec.y, lp, lm);
  const IntMatrix alpha = shaped(spec.alpha, k, lp);
  const IntMatrix beta = shaped(spec.beta, lp, k);
  const IntMatrix zz = shaped(spec.z, lp, lp);

  // M1 = xi x + eps y^T (l- x l+), M2 = xi alpha + eps beta^T (k x l+).
  CycloMatrix m1(lm, std::vector<CyclotomicNumber>(lp, CyclotomicNumber(q)));
  for (std::size_t i = 0; i < lm; ++i) {
    for (std::size_t j = 0; j < lp; ++j) {
      m1[i][j] = z.scaled(Rational(x(i, j))) + e.scaled(Rational(y(j, i)));
    }
  }
  rep.applicable = lm == lp && !cyclo_det(m1, q).is_zero();

  CycloMatrix m2(k, std::vector<CyclotomicNumber>(lp, CyclotomicNumber(q)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < lp; ++j) {
      m2[i][j] = z.scaled(Rational(alpha(i, j))) + e.scaled(Rational(beta(j, i)));
    }
  }

  // Kernel form: w with m1 w = 0 and m2 w in the image of B_{A0}(xi). B_{A0}
  // is (-eps)-hermitian, so its left kernel is its kernel.
  auto n1 = cyclo_nullspace(m1, lp, q);
  const CycloMatrix b0 = lt_matrix(spec.base, xi);
  auto u = cyclo_nullspace(b0, k, q);
  // Q = U^* m2 N1 (rows: null vectors of B0, cols: basis of ker m1).
  CycloMatrix qm(u.size(),
                 std::vector<CyclotomicNumber>(n1.size(), CyclotomicNumber(q)));
  for (std::size_t a = 0; a < u.size(); ++a) {
    for (std::size_t b = 0; b < n1.size(); ++b) {
      CyclotomicNumber acc(q);
      for (std::size_t i = 0; i < k; ++i) {
        if (u[a][i].is_zero()) continue;
        CyclotomicNumber row(q);
        for (std::size_t j = 0; j < lp; ++j) {
          if (!m2[i][j].is_zero() && !n1[b][j].is_zero()) {
            row = row + m2[i][j] * n1[b][j];
          }
        }
        acc = acc + u[a][i].conjugate() * row;
      }
      qm[a][b] = acc;
    }
  }
  auto coeffs = cyclo_nullspace(qm, n1.size(), q);
  std::vector<std::vector<CyclotomicNumber>> w;
  for (const auto& c : coeffs) {
    std::vector<CyclotomicNumber> v(lp, CyclotomicNumber(q));
    for (std::size_t b = 0; b < n1.size(); ++b) {
      if (c[b].is_zero()) continue;
      for (std::size_t j = 0; j < lp; ++j) v[j] = v[j] + c[b] * n1[b][j];
    }
    w.push_back(std::move(v));
  }
  rep.kernel_form_dim = w.size();

  // E = (1 - xi) z - eps (1 - conj xi) z^T restricted to W: W^* E W.
  const CycloMatrix big_e = lt_matrix(SeifertForm(zz, spec.base.parity()), xi);
  CycloMatrix f(w.size(), std::vector<CyclotomicNumber>(w.size(), CyclotomicNumber(q)));
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = 0; b < w.size(); ++b) {
      CyclotomicNumber acc(q);
      for (std::size_t i = 0; i < lp; ++i) {
        if (w[a][i].is_zero()) continue;
        CyclotomicNumber col(q);
        for (std::size_t j = 0; j < lp; ++j) {
          if (!big_e[i][j].is_zero() && !w[b][j].is_zero()) {
            col = col + big_e[i][j] * w[b][j];
          }
        }
        acc = acc + w[a][i].conjugate() * col;
      }
      f[a][b] = acc;
    }
  }
  rep.kernel_form_signature = lt_signature_of(f, eps, q);
  return rep;
}

MKReport mk_check(const MKInstance& inst) {
  if (inst.a0.parity() != inst.a1.parity()) {
    throw std::invalid_argument("mk_check: Seifert forms must share parity");
  }
  const LTResult r0 = lt_invariants(inst.a0, inst.xi);
  const LTResult r1 = lt_invariants(inst.a1, inst.xi);
  MKReport rep;
  rep.lhs = std::labs(r0.signature - r1.signature);
  rep.rhs = inst.b_sigma - inst.b_sigma0 - inst.b_sigma1 +
            static_cast<long>(r0.nullity) + static_cast<long>(r1.nullity);
  rep.holds = rep.lhs <= rep.rhs;
  rep.slack = rep.rhs - rep.lhs;
  return rep;
}

DistinguishReport distinguish(const SeifertForm& s0, const SeifertForm& s1,
                              long sample_q) {
  if (s0.parity() != s1.parity()) {
    throw std::invalid_argument("distinguish: Seifert forms must share parity");
  }
  DistinguishReport rep;
  const LaurentPolynomial d0 = alexander(s0), d1 = alexander(s1);
  if (!(d0 == d1)) {
    rep.distinguished = true;
    rep.witness = "Alexander polynomial: " + d0.to_string() + " vs " +
                  d1.to_string();
    return rep;
  }
  for (const auto& xi : RootOfUnity::all_up_to(sample_q)) {
    const LTResult r0 = lt_invariants(s0, xi);
    const LTResult r1 = lt_invariants(s1, xi);
    if (r0.nullity != r1.nullity) {
      rep.distinguished = true;
      rep.witness = "nullity at xi = " + xi.to_string() + ": " +
                    std::to_string(r0.nullity) + " vs " +
                    std::to_string(r1.nullity);
      return rep;
    }
    if (r0.signature != r1.signature) {
      rep.distinguished = true;
      rep.witness = "signature at xi = " + xi.to_string() + ": " +
                    std::to_string(r0.signature) + " vs " +
                    std::to_string(r1.signature);
      return rep;
    }
  }
  rep.witness = "not distinguished by computed invariants";
  return rep;
}

namespace {

std::string key_of(const IntMatrix& a) { return a.to_string(); }

// All vectors with entries in [-bound, bound] of the given length.
std::vector<std::vector<Integer>> bounded_vectors(std::size_t len, int bound) {
  std::vector<std::vector<Integer>> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<Integer>> next;
    for (const auto& v : out) {
      for (int c = -bound; c <= bound; ++c) {
        auto w = v;
        w.emplace_back(c);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string vec_string(const std::vector<Integer>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

std::optional<std::vector<std::string>> s_equivalence_search(
    const SeifertForm& s0, const SeifertForm& s1, int depth, int bound,
    std::size_t max_dim, std::size_t node_budget) {
  if (s0.parity() != s1.parity()) {
    throw std::invalid_argument("s_equivalence_search: parity mismatch");
  }
  const int parity = s0.parity();
  struct Node {
    IntMatrix a;
    int depth;
    std::size_t parent;
    std::string move;
  };
  std::vector<Node> nodes{{s0.matrix(), 0, 0, ""}};
  std::unordered_set<std::string> seen{key_of(s0.matrix())};
  const std::string target = key_of(s1.matrix());

  auto path_to = [&](std::size_t idx) {
    std::vector<std::string> log;
    while (idx != 0) {
      log.push_back(nodes[idx].move);
      idx = nodes[idx].parent;
    }
    return std::vector<std::string>(log.rbegin(), log.rend());
  };
  if (seen.count(target)) return std::vector<std::string>{};

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= depth) continue;
    const IntMatrix cur = nodes[head].a;
    const int d = nodes[head].depth;
    const std::size_t k = cur.rows();
    std::vector<std::pair<IntMatrix, std::string>> next;

    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        for (int s : {1, -1}) {
          IntMatrix p = IntMatrix::identity(k);
          p(j, i) = s;
          next.emplace_back(p.transpose() * cur * p,
                            "congruence e" + std::to_string(i) + " += " +
                                std::to_string(s) + " e" + std::to_string(j));
        }
      }
      IntMatrix p = IntMatrix::identity(k);
      p(i, i) = -1;
      next.emplace_back(p * cur * p, "congruence e" + std::to_string(i) +
                                         " -> -e" + std::to_string(i));
    }
    for (const auto& red : s_reduce_candidates(SeifertForm(cur, parity))) {
      next.emplace_back(red.matrix(), "reduction to dimension " +
                                          std::to_string(red.dim()));
    }
    if (k + 2 <= max_dim) {
      for (const auto& v : bounded_vectors(k, bound)) {
        const SeifertForm base(cur, parity);
        IntMatrix col = IntMatrix::from_rows(
            [&] {
              std::vector<std::vector<Integer>> rows;
              for (const auto& e : v) rows.push_back({e});
              return rows;
            }(),
            1);
        IntMatrix row = IntMatrix::from_rows({v}, k);
        if (k == 0) {
          col = IntMatrix(0, 1);
          row = IntMatrix(1, 0);
        }
        next.emplace_back(s_enlarge(base, SMove::kColumn, col).matrix(),
                          "column move alpha = " + vec_string(v));
        next.emplace_back(s_enlarge(base, SMove::kRow, row).matrix(),
                          "row move beta = " + vec_string(v));
      }
    }
    for (auto& [m, label] : next) {
      std::string key = key_of(m);
      if (!seen.insert(key).second) continue;
      nodes.push_back({std::move(m), d + 1, head, std::move(label)});
      if (key == target) return path_to(nodes.size() - 1);
      if (nodes.size() >= node_budget) return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace cobord
