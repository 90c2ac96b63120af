#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cobord/chain.hpp"
#include "cobord/cyclotomic.hpp"
#include "cobord/forms.hpp"
#include "cobord/int_matrix.hpp"
#include "cobord/seifert.hpp"

namespace cobord {

/// Seeded instance generators for the property suites. Everything is a
/// deterministic function of the engine state.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi);
  bool coin(double p = 0.5);
  std::mt19937_64& engine() { return rng_; }

  IntMatrix matrix(std::size_t rows, std::size_t cols, long bound);
  /// Product of random elementary operations; *inverse receives the inverse.
  IntMatrix unimodular(std::size_t n, IntMatrix* inverse = nullptr,
                       int steps = 0);

  /// eps-symmetric gram with entries in [-bound, bound].
  EpsSymmetricForm form(int epsilon, std::size_t dim, long bound);
  EnlargementSpec enlargement(const EpsSymmetricForm& base,
                              std::size_t l_minus, std::size_t l_plus,
                              long bound);
  /// Rank-(l, l) enlargement with |det D| = 1.
  EnlargementSpec h_enlargement(const EpsSymmetricForm& base, std::size_t l,
                                long bound);

  SeifertForm seifert(std::size_t k, int parity, long bound);
  SeifertEnlargementSpec seifert_enlargement(const SeifertForm& base,
                                             std::size_t l_minus,
                                             std::size_t l_plus, long bound);
  /// Rank-(l, l) enlargement with x + eps y^T unimodular.
  SeifertEnlargementSpec seifert_h_enlargement(const SeifertForm& base,
                                               std::size_t l, long bound);
  /// start followed by up to `moves` forms, each one S-move (enlargement,
  /// visible reduction, or elementary congruence) away from its predecessor.
  std::vector<SeifertForm> s_chain(const SeifertForm& start, int moves,
                                   long bound, std::size_t max_dim = 9);

  /// Real element of Q(zeta_q): a random c plus its conjugate, or an exact
  /// zero written in a non-obvious way when `zero` is set.
  CyclotomicNumber real_cyclotomic(long q, long bound, bool zero = false);

  /// Direct sum of elementary pieces (Z in one degree, or Z -m-> Z) in
  /// degrees [lo, hi], scrambled by unimodular changes of basis.
  ChainComplex complex(int lo, int hi, std::size_t max_pieces, long bound);
  /// Isomorphic copy of c together with the isomorphism and its inverse.
  struct Isomorph {
    ChainComplex copy;
    ChainMap to;
    ChainMap from;
  };
  Isomorph isomorph(const ChainComplex& c);
  /// d h + h d for a random degree-one map h.
  ChainMap null_homotopic(const ChainComplex& a, const ChainComplex& b,
                          long bound);
  /// f: a -> D with D = (copy of a) + (random complex) and f = k * inclusion
  /// + null-homotopic noise, k drawn from {-1, 0, 1, 2}. k = +-1 with a zero
  /// extra summand is a quasi-isomorphism.
  ChainMap chain_map_from(const ChainComplex& a, long bound);

  HalfHandleData half_handle(int lo, int hi, long bound);
  RelativeCobordismTriad triad(int lo, int hi, long bound);

 private:
  std::mt19937_64 rng_;
};

}  // namespace cobord
