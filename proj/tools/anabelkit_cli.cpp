// Command-line front end.  Exit codes: 0 success / affirmative, 1 negative
// verdict or table mismatch, 2 undecided, 3 bad input, 4 precision
// exhausted, 5 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "anabelkit/reports.hpp"

namespace {

using namespace anabelkit;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// "@path" reads the spec from a file.
std::string spec_arg(const std::string& s) { return !s.empty() && s[0] == '@' ? read_file(s.substr(1)) : s; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anabelkit: p-adic fields, anabelomorphy, ramification and Tate's algorithm"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "pretty", out_path;
  app.add_option("--prec", cfg.precision, "working precision in base-p digits")->capture_default_str();
  app.add_option("--seed", cfg.seed, "RNG seed for search")->capture_default_str();
  app.add_option("--budget", cfg.budget, "cap on Tate minimalization rounds")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads for tables and search (0: all cores)")->capture_default_str();
  app.add_option("--format", format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  std::string s1, s2, curve, field, table_id, rows_path;
  long first_n = -1;
  SearchOptions sopt;
  std::string filter = "any";

  auto* check = app.add_subcommand("check-anab", "Jarden-Ritter anabelomorphism test for two Kummer fields");
  check->add_option("field1", s1, "\"p=3 r=2 rad=3\"")->required();
  check->add_option("field2", s2, "\"p=3 r=2 rad=4\"")->required();

  auto* disc = app.add_subcommand("disc", "different and discriminant valuation of a tower");
  disc->add_option("field", field, "field spec, or @file")->required();

  auto* cond = app.add_subcommand("conductor", "ramification filtration and Artin/Swan conductors");
  cond->add_option("field", field, "field spec, or @file")->required();

  auto* tate = app.add_subcommand("tate", "Tate's algorithm for a curve over a tower");
  tate->add_option("curve", curve, "[a1,a2,a3,a4,a6] in z")->required();
  tate->add_option("field", field, "field spec, or @file")->required();

  auto* table = app.add_subcommand("table", "regenerate a reference table");
  table->add_option("id", table_id, "1, elliptic-additive or elliptic-semistable")->required();
  table->add_option("--rows", rows_path, "row file instead of the built-in rows");
  table->add_option("--first", first_n, "only the first N rows");

  auto* search = app.add_subcommand("search", "seeded random curve search across two fields");
  search->add_option("--count", sopt.count, "rows to emit")->capture_default_str();
  search->add_option("--field-k", sopt.field_k, "first field")->capture_default_str();
  search->add_option("--field-l", sopt.field_l, "second field")->capture_default_str();
  search->add_option("--filter", filter, "any, semistable or additive")
      ->check(CLI::IsMember({"any", "semistable", "additive"}))
      ->capture_default_str();
  search->add_option("--attempts", sopt.max_attempts, "candidate cap (0: 50 per row)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    Report r;
    if (*check) {
      r = cmd_check_anab(s1, s2, cfg);
    } else if (*disc) {
      r = cmd_disc(spec_arg(field), cfg);
    } else if (*cond) {
      r = cmd_conductor(spec_arg(field), cfg);
    } else if (*tate) {
      r = cmd_tate(curve, spec_arg(field), cfg);
    } else if (*table) {
      std::string text;
      if (!rows_path.empty()) text = read_file(rows_path);
      r = cmd_table(parse_table_id(table_id), rows_path.empty() ? nullptr : &text, first_n, cfg);
    } else if (*search) {
      sopt.field_k = spec_arg(sopt.field_k);
      sopt.field_l = spec_arg(sopt.field_l);
      sopt.filter = parse_search_filter(filter);
      r = cmd_search(sopt, cfg);
    }
    for (const auto& l : r.log) std::cerr << l << "\n";
    const std::string text = render(r, parse_format(format));
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw DomainError("cannot write '" + out_path + "'");
      out << text;
    }
    return r.exit_code;
  } catch (const PrecisionError& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
}
