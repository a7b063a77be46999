#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "anabelkit/padic.hpp"

namespace anabelkit {

enum class OutputFormat { Json, Csv, Pretty };
OutputFormat parse_format(const std::string& name);

struct RunConfig {
  long precision = kDefaultPrecision;
  std::uint64_t seed = 1;
  long budget = 1000;  // Tate step-11 rounds / search attempts multiplier
  unsigned threads = 0;  // 0: hardware concurrency
};

// Result of one command: structured data plus the process exit code.
struct Report {
  nlohmann::json data;  // object or array of records
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> pretty;  // lines
  std::vector<std::string> log;     // diagnostics (stderr)
  int exit_code = 0;
};

std::string render(const Report& r, OutputFormat f);

// Runs fn(0..n-1) on up to `threads` workers; results come back in index order.
void parallel_for_ordered(size_t n, unsigned threads, const std::function<void(size_t)>& fn);

// Exit codes: 0 ANABELOMORPHIC, 1 NOT, 2 UNDECIDED.
Report cmd_check_anab(const std::string& spec1, const std::string& spec2, const RunConfig& cfg);
Report cmd_disc(const std::string& field_spec, const RunConfig& cfg);
Report cmd_conductor(const std::string& field_spec, const RunConfig& cfg);
Report cmd_tate(const std::string& curve, const std::string& field_spec, const RunConfig& cfg);

enum class TableId { Discriminants, EllipticAdditive, EllipticSemistable };
TableId parse_table_id(const std::string& name);  // "1", "elliptic-additive", "elliptic-semistable"

/*
 * Rows for the table command.  Built-in golden rows unless `rows_text` is
 * given: one row per line, '#' comments allowed.
 *   table 1:     <radicand in z> [| <expected v_3(disc)>]   over p=3 r=2
 *   elliptic:    <curve> | <field K> | <field L> [| <expected K> | <expected L>]
 * Field specs inside a row use ';' between steps.  Exit code 1 on any mismatch.
 */
Report cmd_table(TableId id, const std::string* rows_text, long first_n, const RunConfig& cfg);

enum class SearchFilter { Any, Semistable, Additive };
SearchFilter parse_search_filter(const std::string& name);

struct SearchOptions {
  std::string field_k = "p=3 r=2 rad=3";
  std::string field_l = "p=3 r=2 rad=4";
  long count = 5;             // rows to emit
  SearchFilter filter = SearchFilter::Any;
  long max_attempts = 0;      // 0: 50 * count
};

// Seeded stream of curves [0, a2, 0, a4, a6] with small coefficients in the
// cyclotomic generator z; deterministic for a fixed seed and options.
std::vector<std::string> search_candidates(std::uint64_t seed, long how_many, long z_degree);
Report cmd_search(const SearchOptions& opt, const RunConfig& cfg);

}  // namespace anabelkit
