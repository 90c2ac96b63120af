#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cobord/chain.hpp"
#include "cobord/cyclotomic.hpp"
#include "cobord/errors.hpp"
#include "cobord/forms.hpp"
#include "cobord/io.hpp"
#include "cobord/seifert.hpp"
#include "cobord/verify.hpp"

namespace fs = std::filesystem;
using namespace cobord;

namespace {

SeifertFile load_seifert(const std::string& path) {
  return parse_seifert(read_file(path));
}

RootOfUnity parse_xi(const std::string& text) {
  try {
    return RootOfUnity::parse(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--xi", e.what());
  }
}

void print_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) w[j] = header[j].size();
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) w[j] = std::max(w[j], r[j].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) s += "  ";
      s += r[j];
      if (j + 1 < r.size()) s += std::string(w[j] - r[j].size(), ' ');
    }
    os << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

struct CorpusRow {
  std::string label;
  std::string delta, sigma, nullity;
};

int run_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) {
    std::cerr << "error: " << dir << " is not a directory\n";
    return 2;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::future<CorpusRow>> jobs;
  for (const auto& p : files) {
    jobs.push_back(std::async(std::launch::async, [p] {
      SeifertFile f = load_seifert(p.string());
      const LTResult r = lt_invariants(f.form, RootOfUnity(1, 2));
      return CorpusRow{f.label.empty() ? p.stem().string() : f.label,
                       alexander(f.form).to_string(),
                       std::to_string(r.signature), std::to_string(r.nullity)};
    }));
  }
  std::vector<CorpusRow> rows;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      rows.push_back(jobs[i].get());
    } catch (const std::exception& e) {
      std::cerr << "skipped " << files[i].filename().string() << ": " << e.what()
                << '\n';
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CorpusRow& a, const CorpusRow& b) { return a.label < b.label; });
  std::map<std::string, int> count;
  for (const auto& r : rows) ++count[r.label];
  std::map<std::string, int> seen;
  for (auto& r : rows) {
    if (count[r.label] > 1) {
      const int k = ++seen[r.label];
      if (k == 1) {
        std::cerr << "warning: duplicate label '" << r.label << "' ("
                  << count[r.label] << " files)\n";
      }
      r.label += "#" + std::to_string(k);
    }
  }
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) table.push_back({r.label, r.delta, r.sigma, r.nullity});
  print_table(std::cout, {"label", "alexander", "sigma(1/2)", "nullity(1/2)"}, table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra of cobordism, Seifert forms and Levine-Tristram invariants"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string file, file2, xi_text, out_format = "csv", suite, dir;
  long qmax = 8;
  std::size_t cases = 100;
  std::uint64_t seed = 1;

  auto* alex = app.add_subcommand("alexander", "Normalized Alexander polynomial");
  alex->add_option("file", file, "Seifert file")->required();
  alex->callback([&] {
    std::cout << alexander(load_seifert(file).form).to_string() << '\n';
  });

  auto* lt = app.add_subcommand("lt-sig", "Levine-Tristram signature and nullity at xi");
  lt->add_option("file", file, "Seifert file")->required();
  lt->add_option("--xi", xi_text, "root of unity p/q (q >= 2, xi != 1)")->required();
  lt->callback([&] {
    const RootOfUnity xi = parse_xi(xi_text);
    const LTResult r = lt_invariants(load_seifert(file).form, xi);
    std::cout << "xi = " << xi.to_string() << '\n'
              << "nullity = " << r.nullity << '\n'
              << "signature = " << r.signature << '\n'
              << "delta_zero = " << (r.alexander_value_is_zero ? "true" : "false")
              << '\n';
  });

  auto* prof = app.add_subcommand("lt-profile", "Invariants at every p/q with q <= Q");
  prof->add_option("file", file, "Seifert file")->required();
  prof->add_option("--denominator-max", qmax, "largest denominator Q")
      ->check(CLI::Range(2L, 200L));
  prof->add_option("--out", out_format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}));
  prof->callback([&] {
    const auto rows = lt_profile(load_seifert(file).form, qmax);
    if (out_format == "csv") {
      std::cout << print_profile_csv(rows);
      return;
    }
    std::vector<std::vector<std::string>> t;
    for (const auto& r : rows) {
      t.push_back({r.xi.to_string(), std::to_string(r.nullity),
                   std::to_string(r.signature), r.delta_zero ? "true" : "false"});
    }
    print_table(std::cout, {"p/q", "nullity", "signature", "delta_zero"}, t);
  });

  auto* wall = app.add_subcommand("wall", "Wall non-additivity invariant of three lagrangians");
  wall->add_option("file", file, "wall triad file")->required();
  wall->callback([&] {
    std::cout << wall_triad_signature(parse_wall(read_file(file))) << '\n';
  });

  auto* ch = app.add_subcommand("chain-homology", "Homology of a chain complex");
  ch->add_option("file", file, "complex file")->required();
  ch->callback([&] {
    std::cout << homology_string(parse_complex(read_file(file))) << '\n';
  });

  auto* split = app.add_subcommand("triad-split", "Algebraic splitting of a cobordism triad");
  split->add_option("file", file, "triad file")->required();
  split->callback([&] {
    const TriadSplitting s = split_triad(parse_triad(read_file(file)));
    std::cout << "C'':  " << homology_string(s.c2) << '\n'
              << "B'':  " << homology_string(s.b2) << '\n'
              << "E-:   " << homology_string(s.e_minus) << '\n'
              << "E+:   " << homology_string(s.e_plus) << '\n'
              << "D  ~ C u_{C''} C':   " << (s.d_certified ? "certified" : "FAILED") << '\n'
              << "E  ~ E- u_{B''} E+:  " << (s.e_certified ? "certified" : "FAILED") << '\n'
              << "C  ~ E- u_{B''} C'': " << (s.c_certified ? "certified" : "FAILED") << '\n'
              << "C' ~ C'' u_{B''} E+: " << (s.cp_certified ? "certified" : "FAILED") << '\n';
    if (!s.all_certified()) exit_code = 1;
  });

  auto* mk = app.add_subcommand("mk-check", "Murasugi-Kawauchi inequality");
  mk->add_option("file", file, "instance file")->required();
  mk->callback([&] {
    const MKReport r = mk_check(parse_mk(read_file(file)));
    std::cout << "lhs = " << r.lhs << '\n'
              << "rhs = " << r.rhs << '\n'
              << "holds = " << (r.holds ? "true" : "false") << '\n'
              << "slack = " << r.slack << '\n';
    if (!r.holds) exit_code = 1;
  });

  auto* dist = app.add_subcommand("distinguish", "Try to tell two Seifert forms apart");
  dist->add_option("first", file, "Seifert file")->required();
  dist->add_option("second", file2, "Seifert file")->required();
  dist->add_option("--denominator-max", qmax, "largest denominator sampled")
      ->check(CLI::Range(2L, 200L));
  dist->callback([&] {
    const DistinguishReport r =
        distinguish(load_seifert(file).form, load_seifert(file2).form, qmax);
    std::cout << (r.distinguished ? "distinguished by " : "") << r.witness << '\n';
  });

  auto* ver = app.add_subcommand("verify", "Run a randomized property suite");
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  ver->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(names));
  ver->add_option("--cases", cases, "number of random cases");
  ver->add_option("--seed", seed, "seed");
  ver->callback([&] {
    std::vector<std::string> todo =
        suite == "all" ? suite_names() : std::vector<std::string>{suite};
    for (const auto& n : todo) {
      if (!run_suite(n, cases, seed, std::cout).ok()) exit_code = 1;
    }
  });

  auto* corpus = app.add_subcommand("corpus", "Tabulate invariants of every Seifert file in a directory");
  corpus->add_option("dir", dir, "directory")->required();
  corpus->add_option("--report", out_format, "report format")
      ->check(CLI::IsMember({"table"}));
  corpus->callback([&] { exit_code = run_corpus(dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
