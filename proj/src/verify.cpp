#include "cobord/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cobord/chain.hpp"
#include "cobord/cyclotomic.hpp"
#include "cobord/forms.hpp"
#include "cobord/io.hpp"
#include "cobord/laurent.hpp"
#include "cobord/random.hpp"
#include "cobord/seifert.hpp"

namespace cobord {
namespace {

// A case returns nothing on success, or a failure report including the
// instance.
using CaseFn = std::function<std::optional<std::string>(InstanceGenerator&)>;

std::string form_text(const EpsSymmetricForm& f) {
  return "eps = " + std::to_string(f.epsilon()) + ", gram = " +
         f.gram().to_string();
}

std::string seifert_text(const SeifertForm& s) {
  return "parity = " + std::to_string(s.parity()) + ", A = " +
         s.matrix().to_string();
}

std::string spec_text(const EnlargementSpec& s) {
  std::ostringstream os;
  os << "base: " << form_text(s.base) << "\n  l- = " << s.l_minus
     << ", l+ = " << s.l_plus << "\n  C = " << s.c << "\n  D = " << s.d
     << "\n  E = " << s.e;
  return os.str();
}

std::string seifert_spec_text(const SeifertEnlargementSpec& s) {
  std::ostringstream os;
  os << "base: " << seifert_text(s.base) << "\n  l- = " << s.l_minus
     << ", l+ = " << s.l_plus << "\n  alpha = " << s.alpha << "\n  x = " << s.x
     << "\n  beta = " << s.beta << "\n  y = " << s.y << "\n  z = " << s.z;
  return os.str();
}

Integer sign_power(int base_sign, std::size_t l) {
  return (base_sign < 0 && l % 2 == 1) ? Integer(-1) : Integer(1);
}

std::optional<std::string> inv1_case(InstanceGenerator& g) {
  const auto dim = static_cast<std::size_t>(g.uniform(0, 6));
  const auto ell = static_cast<std::size_t>(g.uniform(1, 4));
  EnlargementSpec spec = g.enlargement(g.form(1, dim, 5), 0, ell, 5);
  const EpsSymmetricForm big = enlarge(spec);
  const Inv1Report rep = verify_inv1(spec.base, big, ell);
  std::string why;
  if (!rep.bound_ok) why = "|d sigma| + |d n| exceeds l";
  if (rep.equality_if_rank1 && !*rep.equality_if_rank1) {
    why = "rank-1 enlargement without |d sigma| + |d n| = 1";
  }
  const long perp = inertia(perp_of_base(spec)).signature();
  if (perp != rep.delta_sigma) {
    why = "sigma(F') - sigma(F) = " + std::to_string(rep.delta_sigma) +
          " but sigma(perp) = " + std::to_string(perp);
  }
  if (why.empty()) return std::nullopt;
  return why + "\n  " + spec_text(spec);
}

std::optional<std::string> cor_inv_case(InstanceGenerator& g) {
  const int eps = g.coin() ? 1 : -1;
  const auto dim = static_cast<std::size_t>(g.uniform(0, 5));
  const auto ell = static_cast<std::size_t>(g.uniform(1, 3));
  const EpsSymmetricForm base = g.form(eps, dim, 3);
  EnlargementSpec spec =
      g.coin() ? g.h_enlargement(base, ell, 3) : g.enlargement(base, ell, ell, 3);
  const EpsSymmetricForm big = enlarge(spec);
  const Integer det_d = spec.d.determinant();
  // det B' = (-eps)^l det B det D det D^T.
  const Integer expected =
      sign_power(-eps, ell) * base.gram().determinant() * det_d * det_d;
  const Integer got = big.gram().determinant();
  std::string why;
  if (got != expected) {
    why = "det B' = " + got.get_str() + ", expected " + expected.get_str();
  }
  const InertiaProfile a = inertia(base), b = inertia(big);
  if (is_H_enlargement(spec) &&
      (a.signature() != b.signature() || a.nullity != b.nullity)) {
    why = "H-enlargement changed (sigma, n)";
  }
  const long nd = static_cast<long>(ell - spec.d.rank());
  const long ds = std::labs(b.signature() - a.signature());
  if (ds > std::min(nd, static_cast<long>(a.nullity + b.nullity))) {
    why = "|d sigma| exceeds min(n(D), n(F) + n(F'))";
  }
  if (why.empty()) return std::nullopt;
  return why + "\n  " + spec_text(spec);
}

std::optional<std::string> sequiv_case(InstanceGenerator& g) {
  const int parity = static_cast<int>(g.uniform(0, 1));
  const auto k = static_cast<std::size_t>(g.uniform(0, 4));
  const auto ell = static_cast<std::size_t>(g.uniform(1, 2));
  const SeifertForm base = g.seifert(k, parity, 3);
  const int eps = base.epsilon();
  const SeifertEnlargementSpec spec = g.seifert_enlargement(base, ell, ell, 2);
  const SeifertForm big = h_enlarge(spec);
  // Delta_{A'} = (-1)^l det(t x + eps y^T) det(t y + eps x^T) Delta_A.
  const LaurentPolynomial f1 =
      laurent_det(linear_pencil(spec.x, spec.y.transpose().scaled(eps)));
  const LaurentPolynomial f2 =
      laurent_det(linear_pencil(spec.y, spec.x.transpose().scaled(eps)));
  LaurentPolynomial expected = f1 * f2 * alexander_raw(base);
  if (ell % 2 == 1) expected = -expected;
  const LaurentPolynomial got = alexander_raw(big);
  if (!(got == expected)) {
    return "Delta of enlargement = " + got.to_string() + ", expected " +
           expected.to_string() + "\n  " + seifert_spec_text(spec);
  }
  // Transpose: Delta_{A^T}(t) = (eps t)^k Delta_A(t^-1).
  const SeifertForm tr(base.matrix().transpose(), parity);
  LaurentPolynomial flip =
      alexander_raw(base).inverted().shifted(static_cast<long>(k));
  if (eps < 0 && k % 2 == 1) flip = -flip;
  if (!(alexander_raw(tr) == flip)) {
    return "transpose relation fails\n  " + seifert_text(base);
  }
  const auto chain = g.s_chain(base, static_cast<int>(g.uniform(1, 6)), 2, 8);
  const LaurentPolynomial d0 = alexander(base);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!(alexander(chain[i]) == d0)) {
      std::string why = "normalized Delta changed along an S-move chain: " +
                        d0.to_string() + " -> " + alexander(chain[i]).to_string();
      for (const auto& s : chain) why += "\n  " + seifert_text(s);
      return why;
    }
  }
  return std::nullopt;
}

std::optional<std::string> lt_lemma_case(InstanceGenerator& g) {
  const int parity = static_cast<int>(g.uniform(0, 1));
  const auto k = static_cast<std::size_t>(g.uniform(0, 5));
  SeifertForm s = g.seifert(k, parity, 3);
  if (k >= 2 && g.coin(0.3)) {
    // Plant a trefoil-type block so that Delta has roots on the circle.
    IntMatrix a = s.matrix();
    a(0, 0) = -1;
    a(0, 1) = 1;
    a(1, 0) = 0;
    a(1, 1) = -1;
    for (std::size_t j = 2; j < k; ++j) a(0, j) = a(1, j) = a(j, 0) = a(j, 1) = 0;
    const IntMatrix p = g.unimodular(k);
    s = SeifertForm(p.transpose() * a * p, parity);
  }
  const LaurentPolynomial delta = alexander_raw(s);
  const int eps = s.epsilon();
  for (const auto& xi : RootOfUnity::all_up_to(12)) {
    const CycloMatrix b = lt_matrix(s, xi);
    const std::size_t nullity = k - cyclo_rank(b);
    const bool zero = eval_at(delta, xi).is_zero();
    if ((nullity > 0) != zero) {
      return "nullity " + std::to_string(nullity) + " but Delta(xi) " +
             (zero ? "= 0" : "!= 0") + " at xi = " + xi.to_string() + "\n  " +
             seifert_text(s);
    }
  }
  // B_A(xi) = (conj xi - 1)(xi A + eps A^T) at one random xi.
  const long q = g.uniform(2, 12);
  long p = g.uniform(1, q - 1);
  while (std::gcd(p, q) != 1) p = g.uniform(1, q - 1);
  const RootOfUnity xi(p, q);
  const CycloMatrix b = lt_matrix(s, xi);
  const CyclotomicNumber z = CyclotomicNumber::zeta_power(q, p);
  const CyclotomicNumber f = z.conjugate() - CyclotomicNumber(q, Rational(1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const CyclotomicNumber rhs =
          f * (z.scaled(Rational(s.matrix()(i, j))) +
               CyclotomicNumber(q, Rational(eps * s.matrix()(j, i))));
      if (!(rhs == b[i][j])) {
        return "rewriting identity fails at xi = " + xi.to_string() + "\n  " +
               seifert_text(s);
      }
    }
  }
  // Enlargement invariance: H-enlargements keep (n, sigma); otherwise the
  // jump equals the kernel form signature.
  SeifertForm small = g.seifert(static_cast<std::size_t>(g.uniform(0, 3)), parity, 2);
  SeifertEnlargementSpec spec = g.coin()
                                    ? g.seifert_h_enlargement(small, 1, 2)
                                    : g.seifert_enlargement(small, 1, 1, 2);
  const EnlargementInvarianceReport rep = verify_enlargement_invariance(spec, xi);
  if (rep.applicable && !rep.preserved) {
    return "applicable enlargement changed (n, sigma) at xi = " +
           xi.to_string() + "\n  " + seifert_spec_text(spec);
  }
  if (rep.jump() != rep.kernel_form_signature) {
    return "signature jump " + std::to_string(rep.jump()) +
           " != kernel form signature " +
           std::to_string(rep.kernel_form_signature) + " at xi = " +
           xi.to_string() + "\n  " + seifert_spec_text(spec);
  }
  return std::nullopt;
}

std::string triad_text(const RelativeCobordismTriad& t) {
  return "\n" + print_triad(t);
}

std::optional<std::string> split_case(InstanceGenerator& g) {
  const int hi = static_cast<int>(g.uniform(0, 2));
  const RelativeCobordismTriad t = g.triad(0, hi, 3);
  const TriadSplitting s = split_triad(t);
  if (!s.all_certified()) {
    std::string which;
    if (!s.d_certified) which += " D";
    if (!s.e_certified) which += " E";
    if (!s.c_certified) which += " C";
    if (!s.cp_certified) which += " C'";
    return "split certificates failed for" + which + triad_text(t);
  }
  const ChainComplex u1 = union_of(t.b_c, t.b_e);
  const ChainComplex u2 = union_of(t.b_e, t.b_c);
  if (u1.homology() != u2.homology()) {
    return "union is not symmetric in homology" + triad_text(t);
  }
  return std::nullopt;
}

std::optional<std::string> half_handle_case(InstanceGenerator& g) {
  const int hi = static_cast<int>(g.uniform(0, 2));
  const HalfHandleData h = g.half_handle(0, hi, 3);
  const ChainComplex c = half_handle_complex(h);
  const ChainComplex k = cone(h.d);
  auto dump = [&] {
    return "\n[C+]\n" + print_complex(h.c_plus) + "[C-]\n" +
           print_complex(h.c_minus) + "[cone d]\n" + print_complex(k);
  };
  for (int r = -3; r <= hi + 3; ++r) {
    if (!(c.homology(r) == k.homology(r + 1))) {
      return "H_" + std::to_string(r) + "(C) = " + c.homology(r).to_string() +
             " but H_" + std::to_string(r + 1) + "(cone d) = " +
             k.homology(r + 1).to_string() + dump();
    }
  }
  if (is_H_cobordism(h) != is_acyclic(k)) {
    return "is_H_cobordism disagrees with acyclicity of the cone" + dump();
  }
  if (c.euler_characteristic() !=
      h.c_plus.euler_characteristic() + h.c_minus.euler_characteristic()) {
    return "Euler characteristic is not additive" + dump();
  }
  return std::nullopt;
}

CaseFn case_for(const std::string& name) {
  if (name == "inv1") return inv1_case;
  if (name == "cor-inv") return cor_inv_case;
  if (name == "sequiv") return sequiv_case;
  if (name == "lt-lemma") return lt_lemma_case;
  if (name == "split") return split_case;
  if (name == "half-handle") return half_handle_case;
  std::string known;
  for (const auto& n : suite_names()) known += " " + n;
  throw std::invalid_argument("unknown suite '" + name + "'; known:" + known);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "inv1", "cor-inv", "sequiv", "lt-lemma", "split", "half-handle"};
  return names;
}

SuiteOutcome run_suite(const std::string& name, std::size_t cases,
                       std::uint64_t seed, std::ostream& out) {
  const CaseFn fn = case_for(name);
  SuiteOutcome o{name, cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    InstanceGenerator g(seed * 0x9E3779B97F4A7C15ULL + i);
    std::optional<std::string> failure;
    try {
      failure = fn(g);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      out << name << " case " << i << " FAILED: " << *failure << '\n';
    } else {
      ++o.passed;
    }
  }
  out << name << ": " << o.passed << "/" << cases << " cases passed (seed "
      << seed << ")\n";
  return o;
}

}  // namespace cobord
