#include "cobord/smith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cobord/errors.hpp"

namespace cobord {
namespace {

// Elementary operations applied to the working matrix are mirrored on the
// transforms so that u * source * v = work holds at every step.
class SmithState {
 public:
  explicit SmithState(const IntMatrix& m)
      : work(m),
        u(IntMatrix::identity(m.rows())),
        u_inv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        v_inv(IntMatrix::identity(m.cols())) {}

  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& c) {
    if (sgn(c) == 0) return;
    for (std::size_t k = 0; k < work.cols(); ++k) work(i, k) += c * work(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) += c * u(j, k);
    for (std::size_t k = 0; k < u_inv.rows(); ++k) u_inv(k, j) -= c * u_inv(k, i);
  }

  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& c) {
    if (sgn(c) == 0) return;
    for (std::size_t k = 0; k < work.rows(); ++k) work(k, i) += c * work(k, j);
    for (std::size_t k = 0; k < v.rows(); ++k) v(k, i) += c * v(k, j);
    for (std::size_t k = 0; k < v_inv.cols(); ++k) v_inv(j, k) -= c * v_inv(i, k);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < work.cols(); ++k) std::swap(work(i, k), work(j, k));
    for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u(i, k), u(j, k));
    for (std::size_t k = 0; k < u_inv.rows(); ++k) std::swap(u_inv(k, i), u_inv(k, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < work.rows(); ++k) std::swap(work(k, i), work(k, j));
    for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v(k, i), v(k, j));
    for (std::size_t k = 0; k < v_inv.cols(); ++k) std::swap(v_inv(i, k), v_inv(j, k));
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < work.cols(); ++k) work(i, k) = -work(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) = -u(i, k);
    for (std::size_t k = 0; k < u_inv.rows(); ++k) u_inv(k, i) = -u_inv(k, i);
  }

  IntMatrix work, u, u_inv, v, v_inv;
};

// Nearest-integer quotient: the remainder a - q b has |r| <= |b| / 2.
Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs(r) > abs(b)) ++q;
  return q;
}

// Clears column t below the pivot by repeated division with the smallest
// nonzero entry.
void eliminate_column(SmithState& s, std::size_t t) {
  const std::size_t rows = s.work.rows();
  for (;;) {
    std::size_t best = t;
    for (std::size_t i = t; i < rows; ++i) {
      if (sgn(s.work(i, t)) == 0) continue;
      if (sgn(s.work(best, t)) == 0 || abs(s.work(i, t)) < abs(s.work(best, t))) best = i;
    }
    s.swap_rows(t, best);
    bool rest = false;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (sgn(s.work(i, t)) == 0) continue;
      s.add_row(i, t, -nearest_quotient(s.work(i, t), s.work(t, t)));
      rest = rest || sgn(s.work(i, t)) != 0;
    }
    if (!rest) return;
  }
}

// Same for row t to the right of the pivot.
void eliminate_row(SmithState& s, std::size_t t) {
  const std::size_t cols = s.work.cols();
  for (;;) {
    std::size_t best = t;
    for (std::size_t j = t; j < cols; ++j) {
      if (sgn(s.work(t, j)) == 0) continue;
      if (sgn(s.work(t, best)) == 0 || abs(s.work(t, j)) < abs(s.work(t, best))) best = j;
    }
    s.swap_cols(t, best);
    bool rest = false;
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (sgn(s.work(t, j)) == 0) continue;
      s.add_col(j, t, -nearest_quotient(s.work(t, j), s.work(t, t)));
      rest = rest || sgn(s.work(t, j)) != 0;
    }
    if (!rest) return;
  }
}

using Vec = std::vector<Integer>;

std::size_t max_bits(const IntMatrix& m) {
  std::size_t b = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      b = std::max(b, mpz_sizeinbase(m(i, j).get_mpz_t(), 2));
    }
  }
  return b;
}

// Transforms with entries below this size are left as elimination made them.
constexpr std::size_t kTidyBits = 48;

Integer round_nearest(const Rational& x) {
  // floor(x + 1/2)
  Rational y = x + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  return q;
}

// Incremental LLL with exact rational Gram-Schmidt data.
void lll(std::vector<Vec>& b) {
  const std::size_t n = b.size();
  if (n < 2) return;
  const Rational delta(3, 4);
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> bn(n);
  std::vector<std::vector<Rational>> bstar(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> v(b[i].begin(), b[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      Rational num(0);
      for (std::size_t t = 0; t < v.size(); ++t) num += Rational(b[i][t]) * bstar[j][t];
      mu[i][j] = num / bn[j];
      for (std::size_t t = 0; t < v.size(); ++t) v[t] -= mu[i][j] * bstar[j][t];
    }
    Rational nn(0);
    for (const auto& x : v) nn += x * x;
    bn[i] = nn;
    bstar[i] = std::move(v);
  }
  auto reduce = [&](std::size_t k, std::size_t l) {
    if (abs(mu[k][l]) * 2 <= 1) return;
    const Integer q = round_nearest(mu[k][l]);
    for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[l][t];
    mu[k][l] -= q;
    for (std::size_t i = 0; i < l; ++i) mu[k][i] -= q * mu[l][i];
  };
  std::size_t k = 1;
  while (k < n) {
    reduce(k, k - 1);
    if (bn[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
      std::swap(b[k], b[k - 1]);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
      const Rational m = mu[k][k - 1];
      const Rational bnew = bn[k] + m * m * bn[k - 1];
      mu[k][k - 1] = m * bn[k - 1] / bnew;
      bn[k] = bn[k - 1] * bn[k] / bnew;
      bn[k - 1] = bnew;
      for (std::size_t i = k + 1; i < n; ++i) {
        const Rational t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * t;
        mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
      }
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
}

std::vector<Vec> columns_of(const IntMatrix& m) {
  std::vector<Vec> out(m.cols(), Vec(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[j][i] = m(i, j);
  }
  return out;
}

IntMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

// Kernel lattice via LLL on {(W m x, x)}: for large W the reduced basis
// starts with the vectors whose first block vanishes.
IntMatrix lll_kernel(const IntMatrix& m, std::size_t rank) {
  const std::size_t n = m.cols(), r = m.rows();
  const std::size_t k = n - rank;
  if (k == 0) return IntMatrix(n, 0);
  if (rank == 0) return IntMatrix::identity(n);
  Integer w = Integer(1) << static_cast<mp_bitcnt_t>(n + 2);
  for (;;) {
    std::vector<Vec> b(n, Vec(r + n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < r; ++t) b[i][t] = w * m(t, i);
      b[i][r + i] = 1;
    }
    lll(b);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t t = 0; t < r; ++t) {
        if (sgn(b[i][t]) != 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      IntMatrix out(n, k);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) out(i, j) = b[j][r + i];
      }
      return out;
    }
    w *= w;
  }
}

// Nearest-plane reduction of v against the lattice spanned by basis.
void size_reduce(Vec& v, const std::vector<Vec>& basis) {
  const std::size_t k = basis.size();
  if (k == 0) return;
  std::vector<std::vector<Rational>> bstar(k);
  std::vector<Rational> bn(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> x(basis[i].begin(), basis[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      Rational num(0);
      for (std::size_t t = 0; t < x.size(); ++t) num += Rational(basis[i][t]) * bstar[j][t];
      const Rational mu = num / bn[j];
      for (std::size_t t = 0; t < x.size(); ++t) x[t] -= mu * bstar[j][t];
    }
    Rational nn(0);
    for (const auto& e : x) nn += e * e;
    bn[i] = nn;
    bstar[i] = std::move(x);
  }
  for (std::size_t i = k; i-- > 0;) {
    Rational num(0);
    for (std::size_t t = 0; t < v.size(); ++t) num += Rational(v[t]) * bstar[i][t];
    const Integer c = round_nearest(num / bn[i]);
    if (sgn(c) == 0) continue;
    for (std::size_t t = 0; t < v.size(); ++t) v[t] -= c * basis[i][t];
  }
}

// Inverse of a unimodular matrix by exact Gauss-Jordan elimination.
IntMatrix unimodular_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(a(i, j));
    w[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(w[p][c]) == 0) ++p;
    std::swap(w[p], w[c]);
    const Rational inv = 1 / w[c][c];
    for (auto& e : w[c]) e *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(w[i][c]) == 0) continue;
      const Rational f = w[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = w[i][n + j].get_num();
  }
  return out;
}

// Replaces the trailing kernel columns of v by a reduced basis and size
// reduces the leading columns against it; u * source * v is unchanged.
void tidy_columns(IntMatrix& v, IntMatrix& v_inv, const IntMatrix& source,
                  std::size_t rank) {
  const std::size_t n = v.cols();
  if (rank == n || max_bits(v) <= kTidyBits) return;
  std::vector<Vec> ker = columns_of(lll_kernel(source, rank));
  std::vector<Vec> cols = columns_of(v);
  for (std::size_t j = 0; j < rank; ++j) size_reduce(cols[j], ker);
  for (std::size_t j = rank; j < n; ++j) cols[j] = ker[j - rank];
  v = from_columns(cols, v.rows());
  v_inv = unimodular_inverse(v);
}

}  // namespace

std::vector<Integer> SmithDecomposition::invariants() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithState s(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero magnitude in the trailing block.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        const Integer& e = s.work(i, j);
        if (sgn(e) == 0) continue;
        if (!found || abs(e) < abs(s.work(pi, pj))) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    // Euclid on column t, then on row t; a column swap in the second phase
    // can refill column t, so alternate until both are clear.
    for (;;) {
      eliminate_column(s, t);
      eliminate_row(s, t);
      bool column_clear = true;
      for (std::size_t i = t + 1; i < rows && column_clear; ++i) {
        column_clear = sgn(s.work(i, t)) == 0;
      }
      if (!column_clear) continue;
      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(s.work(i, j).get_mpz_t(), s.work(t, t).get_mpz_t())) {
            s.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (sgn(s.work(t, t)) < 0) s.negate_row(t);
    ++t;
  }

  // Elimination leaves u and v with large entries; any basis of the left and
  // right kernels works in the trailing rows/columns, so swap in reduced ones.
  tidy_columns(s.v, s.v_inv, m, t);
  {
    IntMatrix ut = s.u.transpose();
    IntMatrix ut_inv = s.u_inv.transpose();
    tidy_columns(ut, ut_inv, m.transpose(), t);
    s.u = ut.transpose();
    s.u_inv = ut_inv.transpose();
  }

  SmithDecomposition out;
  out.rank = t;
  out.d = std::move(s.work);
  out.u = std::move(s.u);
  out.u_inv = std::move(s.u_inv);
  out.v = std::move(s.v);
  out.v_inv = std::move(s.v_inv);
  out.source = m;
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  return lll_kernel(m, m.rank());
}

IntMatrix lll_reduce_columns(const IntMatrix& b) {
  std::vector<Vec> cols = columns_of(b);
  lll(cols);
  return from_columns(cols, b.rows());
}

IntMatrix saturation(const IntMatrix& a_basis, std::size_t ambient_rank) {
  if (a_basis.rows() != ambient_rank) {
    throw DimensionError("saturation: basis has " +
                         std::to_string(a_basis.rows()) +
                         " rows, ambient rank is " +
                         std::to_string(ambient_rank));
  }
  SmithDecomposition s = smith_normal_form(a_basis);
  return lll_reduce_columns(s.u_inv.block(0, 0, ambient_rank, s.rank));
}

bool is_saturated(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.d(i, i) != 1) return false;
  }
  return true;
}

bool solve_integral(const IntMatrix& a, const IntMatrix& b, IntMatrix* x) {
  if (a.rows() != b.rows()) throw DimensionError("solve_integral: row mismatch");
  // a = u_inv d v_inv, so a x = b  <=>  d (v_inv x) = u b.
  SmithDecomposition s = smith_normal_form(a);
  IntMatrix ub = s.u * b;
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i < s.rank) {
        if (!mpz_divisible_p(ub(i, j).get_mpz_t(), s.d(i, i).get_mpz_t())) {
          return false;
        }
        y(i, j) = ub(i, j) / s.d(i, i);
      } else if (sgn(ub(i, j)) != 0) {
        return false;
      }
    }
  }
  if (x != nullptr) *x = s.v * y;
  return true;
}

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

AbelianGroup cokernel(const IntMatrix& m) {
  SmithDecomposition s = smith_normal_form(m);
  AbelianGroup g;
  g.free_rank = m.rows() - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.d(i, i) != 1) g.torsion.push_back(s.d(i, i));
  }
  return g;
}

AbelianGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_out.cols() != d_in.rows()) {
    throw DimensionError("homology_at: d_out has " +
                         std::to_string(d_out.cols()) + " columns but d_in has " +
                         std::to_string(d_in.rows()) + " rows");
  }
  IntMatrix comp = d_out * d_in;
  for (std::size_t i = 0; i < comp.rows(); ++i) {
    for (std::size_t j = 0; j < comp.cols(); ++j) {
      if (sgn(comp(i, j)) != 0) {
        throw ChainError("d_out * d_in != 0: entry (" + std::to_string(i) +
                         ", " + std::to_string(j) + ") is " +
                         comp(i, j).get_str());
      }
    }
  }
  SmithDecomposition s = smith_normal_form(d_out);
  const std::size_t n = d_out.cols();
  // Coordinates of im(d_in) in the kernel basis v[:, rank:].
  IntMatrix coords = s.v_inv.block(s.rank, 0, n - s.rank, n) * d_in;
  return cokernel(coords);
}

AbelianGroup Presentation::group() const {
  if (relations.rows() != generators) {
    throw DimensionError("presentation: relation matrix has " +
                         std::to_string(relations.rows()) + " rows for " +
                         std::to_string(generators) + " generators");
  }
  return cokernel(relations);
}

std::size_t torsion_free_part(const AbelianGroup& g) { return g.free_rank; }

IntMatrix induced_tf_map(const IntMatrix& f, const Presentation& a,
                         const Presentation& b) {
  if (a.relations.rows() != a.generators || b.relations.rows() != b.generators) {
    throw DimensionError("induced_tf_map: malformed presentation");
  }
  if (f.rows() != b.generators || f.cols() != a.generators) {
    throw DimensionError("induced_tf_map: map is " + std::to_string(f.rows()) +
                         "x" + std::to_string(f.cols()) + ", presentations need " +
                         std::to_string(b.generators) + "x" +
                         std::to_string(a.generators));
  }
  if (!solve_integral(b.relations, f * a.relations, nullptr)) {
    throw std::invalid_argument(
        "induced_tf_map: map does not carry relations into relations");
  }
  SmithDecomposition sa = smith_normal_form(a.relations);
  SmithDecomposition sb = smith_normal_form(b.relations);
  const std::size_t fa = a.generators - sa.rank;
  const std::size_t fb = b.generators - sb.rank;
  IntMatrix section = sa.u_inv.block(0, sa.rank, a.generators, fa);
  IntMatrix projection = sb.u.block(sb.rank, 0, fb, b.generators);
  return projection * f * section;
}

}  // namespace cobord
