#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cobord {

/// inv1, cor-inv, sequiv, lt-lemma, split, half-handle.
const std::vector<std::string>& suite_names();

struct SuiteOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  bool ok() const { return passed == cases; }
};

/// Runs `cases` randomized instances derived from `seed`. Output is a pure
/// function of (name, cases, seed): each failure prints the full instance,
/// followed by one summary line. Throws std::invalid_argument on an unknown
/// suite name.
SuiteOutcome run_suite(const std::string& name, std::size_t cases,
                       std::uint64_t seed, std::ostream& out);

}  // namespace cobord
