#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cobord/int_matrix.hpp"
#include "cobord/smith.hpp"

namespace cobord {

/// Bounded complex of free Z-modules C_lo, ..., C_hi with d_r: C_r -> C_{r-1}.
/// Ranks outside [lo, hi] are zero. d_{r-1} d_r = 0 is checked on construction.
class ChainComplex {
 public:
  /// The zero complex.
  ChainComplex() = default;
  /// ranks[i] is the rank in degree lo + i; diffs[i] is d_{lo+i+1}, so
  /// diffs.size() + 1 == ranks.size() (or both empty).
  ChainComplex(int lo, std::vector<std::size_t> ranks,
               std::vector<IntMatrix> diffs);

  /// Single module Z^n concentrated in degree r.
  static ChainComplex concentrated(int r, std::size_t n);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  bool empty_range() const noexcept { return ranks_.empty(); }
  std::size_t rank(int r) const;
  std::size_t total_rank() const;
  /// d_r as a rank(r-1) x rank(r) matrix; zero-shaped outside the range.
  IntMatrix d(int r) const;

  std::map<int, AbelianGroup> homology() const;
  AbelianGroup homology(int r) const;
  long euler_characteristic() const;

  bool operator==(const ChainComplex& o) const;

 private:
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> diffs_;
};

/// Degree-preserving chain map f: source -> target.
class ChainMap {
 public:
  ChainMap() = default;
  /// Missing components are zero. Throws ChainError if d f != f d.
  ChainMap(ChainComplex source, ChainComplex target,
           std::map<int, IntMatrix> components);

  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const noexcept { return source_; }
  const ChainComplex& target() const noexcept { return target_; }
  /// rank_target(r) x rank_source(r).
  IntMatrix at(int r) const;

  ChainMap operator+(const ChainMap& o) const;
  ChainMap operator-(const ChainMap& o) const;
  ChainMap operator-() const;
  /// (*this) after f.
  ChainMap after(const ChainMap& f) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, IntMatrix> components_;
};

/// Cone(f)_r = D_r + C_{r-1}, d = [[d_D, (-1)^{r-1} f], [0, d_C]].
ChainComplex cone(const ChainMap& f);

/// (C_{*+k})_r = C_{r+k}; the differential is unchanged.
ChainComplex shift(const ChainComplex& c, int k);
ChainMap shift(const ChainMap& f, int k);

/// (C^{m-*})_r = Hom(C_{m-r}, Z), with d_r = (-1)^r (d_{m-r+1})^T.
ChainComplex dual(const ChainComplex& c, int m);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
/// f + g : A + B -> C + D.
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);
/// (f; g) : C -> D + D'.
ChainMap stack(const ChainMap& f, const ChainMap& g);
/// (f g) : C + C' -> D.
ChainMap juxtapose(const ChainMap& f, const ChainMap& g);
/// Projection of a + b onto summand 0 (a) or 1 (b).
ChainMap projection(const ChainComplex& a, const ChainComplex& b, int which);
/// Inclusion of summand 0 (a) or 1 (b) into a + b.
ChainMap inclusion(const ChainComplex& a, const ChainComplex& b, int which);

/// D u_C D' = cone((f; f'): C -> D + D').
ChainComplex union_of(const ChainMap& f, const ChainMap& f_prime);

bool is_acyclic(const ChainComplex& c);
bool is_quasi_iso(const ChainMap& f);

/// Half-handle data: d is a chain map C+ -> (C-)_{*-1}, i.e. its target is
/// shift(c_minus, -1).
struct HalfHandleData {
  ChainComplex c_plus;
  ChainComplex c_minus;
  ChainMap d;

  HalfHandleData() = default;
  HalfHandleData(ChainComplex plus, ChainComplex minus, ChainMap map);
};

/// C_r = C+_r + C-_r with differential [[d+, 0], [(-1)^r d, d-]].
/// Equals cone(d)_{*+1}, so H_r(C) = H_{r+1}(cone d).
ChainComplex half_handle_complex(const HalfHandleData& h);
bool is_H_cobordism(const HalfHandleData& h);

/// Commutative triad
///
///   B  -> C  <- ... and B' -> C'
///   B  -> E  <- B'
///   C  -> D  <- C',  E -> D
///
/// with i_c b_c = i_e b_e and i_cp bp_cp = i_e bp_e.
struct RelativeCobordismTriad {
  ChainComplex b, bp, c, cp, e, d;
  ChainMap b_c, b_e, bp_cp, bp_e, c_d, cp_d, e_d;

  /// Throws ChainError naming the first failing square.
  void validate() const;
};

struct TriadSplitting {
  ChainComplex c2;       // C''  = cone(C + C' -> D)_{*+1}
  ChainComplex b2;       // B''  = cone(C + E + C' -> D + D)_{*+1}
  ChainComplex e_minus;  // E-   = cone(C + E -> D)_{*+1}
  ChainComplex e_plus;   // E+   = cone(E + C' -> D)_{*+1}

  ChainMap c2_to_c, c2_to_cp;
  ChainMap b2_to_e_minus, b2_to_e_plus, b2_to_c2;

  // Comparison maps from each union back to the original complex.
  ChainMap d_comparison;   // C u_{C''} C' -> D
  ChainMap e_comparison;   // E- u_{B''} E+ -> E
  ChainMap c_comparison;   // E- u_{B''} C'' -> C
  ChainMap cp_comparison;  // C'' u_{B''} E+ -> C'

  bool d_certified = false;
  bool e_certified = false;
  bool c_certified = false;
  bool cp_certified = false;

  bool all_certified() const {
    return d_certified && e_certified && c_certified && cp_certified;
  }
};

TriadSplitting split_triad(const RelativeCobordismTriad& t);

/// "H_0 = Z/2, H_1 = 0" over the degree range of c.
std::string homology_string(const ChainComplex& c);

}  // namespace cobord
