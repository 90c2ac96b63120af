#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/chain.hpp"
#include "cobord/cyclotomic.hpp"
#include "cobord/forms.hpp"
#include "cobord/int_matrix.hpp"
#include "cobord/seifert.hpp"

namespace cobord {

// Line-oriented text formats. The grammar is described in docs/formats.md.
// All parsers throw ParseError carrying the 1-based line and field name.

struct SeifertFile {
  std::string label;  // may be empty
  SeifertForm form;
  bool operator==(const SeifertFile&) const = default;
};

SeifertFile parse_seifert(std::string_view text);
std::string print_seifert(const SeifertFile& f);

ChainComplex parse_complex(std::string_view text);
std::string print_complex(const ChainComplex& c);

struct ProfileRow {
  RootOfUnity xi{1, 2};
  std::size_t nullity = 0;
  long signature = 0;
  bool delta_zero = false;
  bool operator==(const ProfileRow&) const = default;
};

/// One row per primitive p/q with 2 <= q <= q_max, sorted by angle.
std::vector<ProfileRow> lt_profile(const SeifertForm& s, long q_max);
/// Header "p/q,nullity,signature,delta_zero", LF line endings.
std::string print_profile_csv(const std::vector<ProfileRow>& rows);
std::vector<ProfileRow> parse_profile_csv(std::string_view text);
/// sigma(p/q) = -eps sigma((q-p)/q) and n(p/q) = n((q-p)/q) on every pair
/// present in the profile.
bool profile_conjugation_symmetric(const std::vector<ProfileRow>& rows,
                                   int epsilon);

/// Three lagrangians of a common form (see docs/formats.md).
TriadLagrangians parse_wall(std::string_view text);
std::string print_wall(const TriadLagrangians& t);

RelativeCobordismTriad parse_triad(std::string_view text);
std::string print_triad(const RelativeCobordismTriad& t);

MKInstance parse_mk(std::string_view text);
std::string print_mk(const MKInstance& m);

std::string read_file(const std::string& path);

}  // namespace cobord
