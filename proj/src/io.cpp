#include "cobord/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cobord/errors.hpp"

namespace cobord {
namespace {

struct Field {
  std::string key;
  std::string value;
  std::size_t line = 0;
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> row_lines;
};

struct Section {
  std::string name;  // "" for the leading anonymous section
  std::size_t line = 0;
  std::vector<Field> fields;

  const Field* find(const std::string& key) const {
    for (const auto& f : fields) {
      if (f.key == key) return &f;
    }
    return nullptr;
  }
  const Field& need(const std::string& key) const {
    const Field* f = find(key);
    if (f == nullptr) {
      std::string where = name.empty() ? "" : " in section [" + name + "]";
      throw ParseError(line == 0 ? 1 : line, key, "missing field" + where);
    }
    return *f;
  }
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

Integer parse_integer(const std::string& tok, std::size_t line,
                      const std::string& field) {
  if (tok.empty()) throw ParseError(line, field, "missing integer");
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) throw ParseError(line, field, "not an integer: '" + tok + "'");
  for (std::size_t j = i; j < tok.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(tok[j]))) {
      throw ParseError(line, field, "not an integer: '" + tok + "'");
    }
  }
  return Integer(tok[0] == '+' ? tok.substr(1) : tok);
}

std::vector<Section> tokenize(std::string_view text) {
  std::vector<Section> out(1);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::string line = trim(raw);
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, line, "unterminated section header");
      out.push_back(Section{trim(line.substr(1, line.size() - 2)), line_no, {}});
      continue;
    }
    if (auto colon = line.find(':'); colon != std::string::npos) {
      Field f;
      f.key = trim(line.substr(0, colon));
      f.value = trim(line.substr(colon + 1));
      f.line = line_no;
      if (out.back().find(f.key) != nullptr) {
        throw ParseError(line_no, f.key, "duplicate field");
      }
      out.back().fields.push_back(std::move(f));
      continue;
    }
    if (out.back().fields.empty()) {
      throw ParseError(line_no, "", "matrix row outside any field");
    }
    Field& f = out.back().fields.back();
    if (!f.value.empty()) {
      throw ParseError(line_no, f.key, "unexpected row after an inline value");
    }
    std::istringstream is(line);
    std::vector<Integer> row;
    std::string tok;
    while (is >> tok) row.push_back(parse_integer(tok, line_no, f.key));
    f.rows.push_back(std::move(row));
    f.row_lines.push_back(line_no);
    if (eol == text.size()) break;
  }
  return out;
}

long field_long(const Field& f) {
  if (f.value.empty()) throw ParseError(f.line, f.key, "missing value");
  Integer v = parse_integer(f.value, f.line, f.key);
  if (!v.fits_slong_p()) throw ParseError(f.line, f.key, "value out of range");
  return v.get_si();
}

std::vector<long> field_longs(const Field& f) {
  std::istringstream is(f.value);
  std::vector<long> out;
  std::string tok;
  while (is >> tok) {
    Integer v = parse_integer(tok, f.line, f.key);
    if (!v.fits_slong_p()) throw ParseError(f.line, f.key, "value out of range");
    out.push_back(v.get_si());
  }
  return out;
}

// Matrix of the given shape (or any shape when rows/cols are nullopt).
IntMatrix field_matrix(const Field& f, std::optional<std::size_t> rows,
                       std::optional<std::size_t> cols) {
  if (!f.value.empty()) {
    throw ParseError(f.line, f.key, "matrix rows belong on the following lines");
  }
  std::size_t width = f.rows.empty() ? cols.value_or(0) : f.rows[0].size();
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    if (f.rows[i].size() != width) {
      throw ParseError(f.row_lines[i], f.key,
                       "ragged matrix: row " + std::to_string(i + 1) + " has " +
                           std::to_string(f.rows[i].size()) +
                           " entries, expected " + std::to_string(width));
    }
  }
  if (rows && f.rows.size() != *rows) {
    throw ParseError(f.line, f.key,
                     "expected " + std::to_string(*rows) + " rows, got " +
                         std::to_string(f.rows.size()));
  }
  if (cols && !f.rows.empty() && width != *cols) {
    throw ParseError(f.row_lines[0], f.key,
                     "expected " + std::to_string(*cols) + " columns, got " +
                         std::to_string(width));
  }
  return IntMatrix::from_rows(f.rows, width);
}

void print_matrix(std::ostream& os, const std::string& key, const IntMatrix& m) {
  os << key << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << ' ';
    for (std::size_t j = 0; j < m.cols(); ++j) os << ' ' << m(i, j);
    os << '\n';
  }
}

void only_keys(const Section& s, std::initializer_list<std::string_view> keys) {
  for (const auto& f : s.fields) {
    if (std::find(keys.begin(), keys.end(), f.key) == keys.end()) {
      throw ParseError(f.line, f.key, "unknown field");
    }
  }
}

void only_sections(const std::vector<Section>& doc,
                   std::initializer_list<std::string_view> names) {
  for (std::size_t i = 1; i < doc.size(); ++i) {
    const Section& s = doc[i];
    if (std::find(names.begin(), names.end(), s.name) == names.end()) {
      throw ParseError(s.line, "[" + s.name + "]", "unknown section");
    }
  }
}

const Section& need_section(const std::vector<Section>& doc,
                            const std::string& name) {
  for (const auto& s : doc) {
    if (s.name == name) return s;
  }
  throw ParseError(1, "[" + name + "]", "missing section");
}

SeifertFile seifert_from(const Section& s) {
  only_keys(s, {"label", "parity", "matrix"});
  SeifertFile out;
  if (const Field* l = s.find("label")) out.label = l->value;
  const Field& p = s.need("parity");
  const long parity = field_long(p);
  const Field& m = s.need("matrix");
  IntMatrix a = field_matrix(m, std::nullopt, std::nullopt);
  if (!a.is_square()) {
    throw ParseError(m.line, "matrix",
                     "Seifert matrix must be square, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  out.form = SeifertForm(std::move(a), static_cast<int>(parity));
  return out;
}

void print_seifert_body(std::ostream& os, const SeifertFile& f) {
  if (!f.label.empty()) os << "label: " << f.label << '\n';
  os << "parity: " << f.form.parity() << '\n';
  print_matrix(os, "matrix", f.form.matrix());
}

ChainComplex complex_from(const Section& s) {
  const Field* lo_f = s.find("lo");
  const Field& ranks_f = s.need("ranks");
  std::vector<long> ranks = field_longs(ranks_f);
  const long lo = lo_f ? field_long(*lo_f) : 0;
  std::vector<std::size_t> r;
  for (long v : ranks) {
    if (v < 0) throw ParseError(ranks_f.line, "ranks", "negative rank");
    r.push_back(static_cast<std::size_t>(v));
  }
  for (const auto& f : s.fields) {
    if (f.key == "lo" || f.key == "ranks") continue;
    bool known = false;
    for (std::size_t i = 1; i < r.size() && !known; ++i) {
      known = f.key == "d " + std::to_string(lo + static_cast<long>(i));
    }
    if (!known) throw ParseError(f.line, f.key, "unknown field");
  }
  if (r.empty()) return ChainComplex();
  std::vector<IntMatrix> diffs;
  for (std::size_t i = 1; i < r.size(); ++i) {
    const std::string key = "d " + std::to_string(lo + static_cast<long>(i));
    const Field* f = s.find(key);
    if (f == nullptr) {
      diffs.emplace_back(r[i - 1], r[i]);
      continue;
    }
    diffs.push_back(field_matrix(*f, r[i - 1], r[i]));
  }
  try {
    return ChainComplex(static_cast<int>(lo), std::move(r), std::move(diffs));
  } catch (const ChainError& e) {
    throw ParseError(ranks_f.line, "d", e.what());
  }
}

void print_complex_body(std::ostream& os, const ChainComplex& c) {
  if (c.empty_range()) {
    os << "lo: 0\nranks:\n";
    return;
  }
  os << "lo: " << c.lo() << '\n' << "ranks:";
  for (int r = c.lo(); r <= c.hi(); ++r) os << ' ' << c.rank(r);
  os << '\n';
  for (int r = c.lo() + 1; r <= c.hi(); ++r) {
    if (c.rank(r) == 0 || c.rank(r - 1) == 0) continue;
    print_matrix(os, "d " + std::to_string(r), c.d(r));
  }
}

ChainMap map_from(const Section& s, const ChainComplex& src,
                  const ChainComplex& tgt) {
  std::map<int, IntMatrix> comps;
  for (const auto& f : s.fields) {
    if (f.key.rfind("at ", 0) != 0) {
      throw ParseError(f.line, f.key, "expected 'at <degree>'");
    }
    Integer deg = parse_integer(trim(f.key.substr(3)), f.line, f.key);
    const int r = static_cast<int>(deg.get_si());
    comps[r] = field_matrix(f, tgt.rank(r), src.rank(r));
  }
  try {
    return ChainMap(src, tgt, std::move(comps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(s.line, "[" + s.name + "]", e.what());
  }
}

void print_map_body(std::ostream& os, const ChainMap& f) {
  const ChainComplex& a = f.source();
  if (a.empty_range()) return;
  for (int r = a.lo(); r <= a.hi(); ++r) {
    IntMatrix m = f.at(r);
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
    print_matrix(os, "at " + std::to_string(r), m);
  }
}

}  // namespace

SeifertFile parse_seifert(std::string_view text) {
  auto doc = tokenize(text);
  if (doc.size() > 1) throw ParseError(doc[1].line, doc[1].name, "unexpected section");
  return seifert_from(doc[0]);
}

std::string print_seifert(const SeifertFile& f) {
  std::ostringstream os;
  print_seifert_body(os, f);
  return os.str();
}

ChainComplex parse_complex(std::string_view text) {
  auto doc = tokenize(text);
  if (doc.size() > 1) throw ParseError(doc[1].line, doc[1].name, "unexpected section");
  return complex_from(doc[0]);
}

std::string print_complex(const ChainComplex& c) {
  std::ostringstream os;
  print_complex_body(os, c);
  return os.str();
}

std::vector<ProfileRow> lt_profile(const SeifertForm& s, long q_max) {
  std::vector<ProfileRow> rows;
  for (const auto& xi : RootOfUnity::all_up_to(q_max)) {
    LTResult r = lt_invariants(s, xi);
    rows.push_back({xi, r.nullity, r.signature, r.alexander_value_is_zero});
  }
  return rows;
}

std::string print_profile_csv(const std::vector<ProfileRow>& rows) {
  std::ostringstream os;
  os << "p/q,nullity,signature,delta_zero\n";
  for (const auto& r : rows) {
    os << r.xi.to_string() << ',' << r.nullity << ',' << r.signature << ','
       << (r.delta_zero ? "true" : "false") << '\n';
  }
  return os.str();
}

std::vector<ProfileRow> parse_profile_csv(std::string_view text) {
  std::vector<ProfileRow> rows;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t n = 0;
  while (std::getline(is, line)) {
    ++n;
    if (n == 1) {
      if (line != "p/q,nullity,signature,delta_zero") {
        throw ParseError(1, "header", "unexpected CSV header");
      }
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 4) throw ParseError(n, "row", "expected 4 columns");
    ProfileRow r;
    try {
      r.xi = RootOfUnity::parse(cells[0]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(n, "p/q", e.what());
    }
    Integer nu = parse_integer(cells[1], n, "nullity");
    if (sgn(nu) < 0) throw ParseError(n, "nullity", "negative nullity");
    r.nullity = nu.get_ui();
    r.signature = parse_integer(cells[2], n, "signature").get_si();
    if (cells[3] != "true" && cells[3] != "false") {
      throw ParseError(n, "delta_zero", "expected true or false");
    }
    r.delta_zero = cells[3] == "true";
    rows.push_back(r);
  }
  return rows;
}

bool profile_conjugation_symmetric(const std::vector<ProfileRow>& rows,
                                   int epsilon) {
  std::map<std::pair<long, long>, const ProfileRow*> by;
  for (const auto& r : rows) by[{r.xi.p(), r.xi.q()}] = &r;
  for (const auto& r : rows) {
    auto it = by.find({r.xi.q() - r.xi.p(), r.xi.q()});
    if (it == by.end()) continue;
    const ProfileRow& c = *it->second;
    if (c.nullity != r.nullity || c.delta_zero != r.delta_zero) return false;
    if (c.signature != -epsilon * r.signature) return false;
  }
  return true;
}

TriadLagrangians parse_wall(std::string_view text) {
  auto doc = tokenize(text);
  only_sections(doc, {});
  const Section& s = doc[0];
  only_keys(s, {"epsilon", "form", "l_minus", "l_dprime", "l_plus"});
  const Field& eps_f = s.need("epsilon");
  const long eps = field_long(eps_f);
  if (eps != 1 && eps != -1) throw ParseError(eps_f.line, "epsilon", "must be 1 or -1");
  const Field& form_f = s.need("form");
  IntMatrix g = field_matrix(form_f, std::nullopt, std::nullopt);
  if (!g.is_square()) throw ParseError(form_f.line, "form", "gram matrix must be square");
  TriadLagrangians t;
  try {
    t.ambient = EpsSymmetricForm(static_cast<int>(eps), g);
  } catch (const std::invalid_argument& e) {
    throw ParseError(form_f.line, "form", e.what());
  }
  // Lagrangians are listed as basis vectors, one per line.
  auto basis = [&](const char* key) {
    const Field& f = s.need(key);
    return field_matrix(f, std::nullopt, g.rows()).transpose();
  };
  t.j_minus = basis("l_minus");
  t.j_dprime = basis("l_dprime");
  t.j_plus = basis("l_plus");
  for (auto [key, j] : {std::pair{"l_minus", &t.j_minus},
                        std::pair{"l_dprime", &t.j_dprime},
                        std::pair{"l_plus", &t.j_plus}}) {
    if (j->rows() != g.rows()) *j = IntMatrix(g.rows(), 0);
    try {
      check_lagrangian(t.ambient, *j);
    } catch (const std::invalid_argument& e) {
      throw ParseError(s.need(key).line, key, e.what());
    }
  }
  return t;
}

std::string print_wall(const TriadLagrangians& t) {
  std::ostringstream os;
  os << "epsilon: " << t.ambient.epsilon() << '\n';
  print_matrix(os, "form", t.ambient.gram());
  print_matrix(os, "l_minus", t.j_minus.transpose());
  print_matrix(os, "l_dprime", t.j_dprime.transpose());
  print_matrix(os, "l_plus", t.j_plus.transpose());
  return os.str();
}

RelativeCobordismTriad parse_triad(std::string_view text) {
  auto doc = tokenize(text);
  only_sections(doc, {"complex B", "complex B'", "complex C", "complex C'",
                      "complex E", "complex D", "map B->C", "map B->E",
                      "map B'->C'", "map B'->E", "map C->D", "map C'->D",
                      "map E->D"});
  only_keys(doc[0], {});
  RelativeCobordismTriad t;
  t.b = complex_from(need_section(doc, "complex B"));
  t.bp = complex_from(need_section(doc, "complex B'"));
  t.c = complex_from(need_section(doc, "complex C"));
  t.cp = complex_from(need_section(doc, "complex C'"));
  t.e = complex_from(need_section(doc, "complex E"));
  t.d = complex_from(need_section(doc, "complex D"));
  auto map = [&](const char* name, const ChainComplex& a, const ChainComplex& b) {
    for (const auto& s : doc) {
      if (s.name == std::string("map ") + name) return map_from(s, a, b);
    }
    return ChainMap::zero(a, b);
  };
  t.b_c = map("B->C", t.b, t.c);
  t.b_e = map("B->E", t.b, t.e);
  t.bp_cp = map("B'->C'", t.bp, t.cp);
  t.bp_e = map("B'->E", t.bp, t.e);
  t.c_d = map("C->D", t.c, t.d);
  t.cp_d = map("C'->D", t.cp, t.d);
  t.e_d = map("E->D", t.e, t.d);
  try {
    t.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, "triad", e.what());
  }
  return t;
}

std::string print_triad(const RelativeCobordismTriad& t) {
  std::ostringstream os;
  auto cx = [&](const char* name, const ChainComplex& c) {
    os << "[complex " << name << "]\n";
    print_complex_body(os, c);
  };
  auto mp = [&](const char* name, const ChainMap& f) {
    os << "[map " << name << "]\n";
    print_map_body(os, f);
  };
  cx("B", t.b);
  cx("B'", t.bp);
  cx("C", t.c);
  cx("C'", t.cp);
  cx("E", t.e);
  cx("D", t.d);
  mp("B->C", t.b_c);
  mp("B->E", t.b_e);
  mp("B'->C'", t.bp_cp);
  mp("B'->E", t.bp_e);
  mp("C->D", t.c_d);
  mp("C'->D", t.cp_d);
  mp("E->D", t.e_d);
  return os.str();
}

MKInstance parse_mk(std::string_view text) {
  auto doc = tokenize(text);
  only_sections(doc, {"A0", "A1"});
  const Section& top = doc[0];
  only_keys(top, {"xi", "b_sigma", "b_sigma0", "b_sigma1"});
  MKInstance m;
  const Field& xi_f = top.need("xi");
  try {
    m.xi = RootOfUnity::parse(xi_f.value);
  } catch (const std::invalid_argument& e) {
    throw ParseError(xi_f.line, "xi", e.what());
  }
  auto betti = [&](const char* key) {
    const Field& f = top.need(key);
    long v = field_long(f);
    if (v < 0) throw ParseError(f.line, key, "Betti numbers are nonnegative");
    return v;
  };
  m.b_sigma = betti("b_sigma");
  m.b_sigma0 = betti("b_sigma0");
  m.b_sigma1 = betti("b_sigma1");
  m.a0 = seifert_from(need_section(doc, "A0")).form;
  m.a1 = seifert_from(need_section(doc, "A1")).form;
  if (m.a0.parity() != m.a1.parity()) {
    throw ParseError(need_section(doc, "A1").line, "parity",
                     "A0 and A1 must share parity");
  }
  return m;
}

std::string print_mk(const MKInstance& m) {
  std::ostringstream os;
  os << "xi: " << m.xi.to_string() << '\n'
     << "b_sigma: " << m.b_sigma << '\n'
     << "b_sigma0: " << m.b_sigma0 << '\n'
     << "b_sigma1: " << m.b_sigma1 << '\n'
     << "[A0]\n";
  print_seifert_body(os, {"", m.a0});
  os << "[A1]\n";
  print_seifert_body(os, {"", m.a1});
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace cobord
