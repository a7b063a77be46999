#include "anabelkit/reports.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <sstream>
#include <thread>

#include "anabelkit/anabelomorphy.hpp"
#include "anabelkit/elliptic.hpp"
#include "anabelkit/galois.hpp"
#include "anabelkit/golden_tables.hpp"
#include "anabelkit/local_field.hpp"

namespace anabelkit {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "pretty") return OutputFormat::Pretty;
  throw DomainError("unknown format '" + name + "' (json, csv, pretty)");
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string mpq_str(const mpq_class& q) { return q.get_str(); }

json reduction_json(const ReductionData& r) {
  return json{{"v_disc", r.v_min_disc},       {"f", r.conductor_exponent}, {"kodaira", r.kodaira.to_string()},
              {"tamagawa", r.tamagawa},       {"m", r.components},         {"quadruple", r.bracket()}};
}

ReductionData checked(const ReductionData& r) {
  if (!r.ogg_saito_holds()) throw std::logic_error("Ogg-Saito relation failed for " + r.bracket());
  return r;
}

unsigned worker_count(unsigned requested, size_t jobs) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<size_t>(t, std::max<size_t>(jobs, 1)));
}

long cyclotomic_z_degree(const FieldSpec& s) {
  if (s.steps.empty() || s.steps.front().kind != TowerStep::Kind::Cyclotomic || s.steps.front().label != "z") return 0;
  long n = s.steps.front().n, phi = n;
  for (long d = 2, m = n; d <= m; ++d)
    if (m % d == 0) {
      phi = phi / d * (d - 1);
      while (m % d == 0) m /= d;
    }
  return phi - 1;
}

}  // namespace

std::string render(const Report& r, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Json:
      os << r.data.dump(2) << "\n";
      break;
    case OutputFormat::Csv: {
      for (size_t i = 0; i < r.csv_header.size(); ++i) os << (i ? "," : "") << csv_cell(r.csv_header[i]);
      os << "\n";
      for (const auto& row : r.csv_rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << "\n";
      }
      break;
    }
    case OutputFormat::Pretty:
      for (const auto& l : r.pretty) os << l << "\n";
      break;
  }
  return os.str();
}

void parallel_for_ordered(size_t n, unsigned threads, const std::function<void(size_t)>& fn) {
  const unsigned t = worker_count(threads, n);
  if (t <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Report cmd_check_anab(const std::string& spec1, const std::string& spec2, const RunConfig& cfg) {
  KummerFieldSpec a = KummerFieldSpec::parse(spec1), b = KummerFieldSpec::parse(spec2);
  AnabelomorphismVerdict v = jarden_ritter(a, b, cfg.precision);
  Report r;
  const std::string status = to_string(v.status);
  r.data = json{{"field1", a.to_string()}, {"field2", b.to_string()}, {"status", status},
                {"degree1", v.degree1},    {"degree2", v.degree2},    {"k0_1", v.k0_1},
                {"k0_2", v.k0_2},          {"reason", v.reason}};
  r.csv_header = {"field1", "field2", "status", "degree1", "degree2", "k0_1", "k0_2", "reason"};
  r.csv_rows = {{a.to_string(), b.to_string(), status, std::to_string(v.degree1), std::to_string(v.degree2), v.k0_1,
                 v.k0_2, v.reason}};
  r.pretty = {status, "  [K:Q_p] = " + std::to_string(v.degree1) + ", [L:Q_p] = " + std::to_string(v.degree2),
              "  K^0 = " + v.k0_1 + ", L^0 = " + v.k0_2, "  " + v.reason};
  r.exit_code = v.status == AnabStatus::Anabelomorphic ? 0 : v.status == AnabStatus::NotAnabelomorphic ? 1 : 2;
  return r;
}

Report cmd_disc(const std::string& field_spec, const RunConfig& cfg) {
  FieldSpec s = FieldSpec::parse(field_spec);
  LocalField K = LocalField::build(s, cfg.precision);
  const long d = discriminant_valuation(K);
  const long diff = different_valuation(K);
  Report r;
  std::string rad;
  if (!s.steps.empty() && s.steps.back().kind == TowerStep::Kind::Kummer) rad = s.steps.back().poly.to_string();
  r.data = json{{"field", s.to_string()}, {"degree", K.degree()}, {"e", K.ramification_index()},
                {"f", K.residue_degree()}, {"different", diff},   {"disc", d}};
  if (!rad.empty()) r.data["radicand"] = rad;
  r.csv_header = {"radicand", "degree", "e", "f", "different", "disc"};
  r.csv_rows = {{rad, std::to_string(K.degree()), std::to_string(K.ramification_index()),
                 std::to_string(K.residue_degree()), std::to_string(diff), std::to_string(d)}};
  if (!rad.empty())
    r.pretty = {"[" + rad + ", " + std::to_string(d) + "]"};
  else
    r.pretty = {std::to_string(d)};
  return r;
}

Report cmd_conductor(const std::string& field_spec, const RunConfig& cfg) {
  FieldSpec s = FieldSpec::parse(field_spec);
  LocalField K = LocalField::build(s, cfg.precision);
  ConductorReport c = conductor_discriminant_check(K);
  Report r;
  json chars = json::array();
  r.csv_header = {"character", "dimension", "artin", "swan"};
  std::string one_line = s.to_string();
  std::replace(one_line.begin(), one_line.end(), '\n', ';');
  r.pretty.push_back("field: " + one_line);
  for (const auto& e : c.characters) {
    chars.push_back(json{{"name", e.name}, {"dimension", e.dimension}, {"artin", e.artin}, {"swan", e.swan}});
    r.csv_rows.push_back({e.name, std::to_string(e.dimension), std::to_string(e.artin), std::to_string(e.swan)});
    r.pretty.push_back("  " + e.name + "  dim " + std::to_string(e.dimension) + "  f = " + std::to_string(e.artin) +
                       "  swan = " + std::to_string(e.swan));
  }
  json upper = json::array();
  std::string lower_s, upper_s;
  for (long b : c.lower_breaks) lower_s += (lower_s.empty() ? "" : ", ") + std::to_string(b);
  for (const auto& u : c.upper_breaks) {
    upper.push_back(mpq_str(u));
    upper_s += (upper_s.empty() ? "" : ", ") + mpq_str(u);
  }
  r.data = json{{"field", s.to_string()},
                {"characters", chars},
                {"lower_breaks", c.lower_breaks},
                {"upper_breaks", upper},
                {"conductor_sum", c.conductor_sum},
                {"disc", c.discriminant_valuation}};
  if (c.base_character_conductor >= 0) r.data["base_character_conductor"] = c.base_character_conductor;
  r.pretty.push_back("  lower breaks: " + lower_s);
  r.pretty.push_back("  upper breaks: " + upper_s);
  r.pretty.push_back("  sum chi(1) f(chi) = " + std::to_string(c.conductor_sum) +
                     " = v_p(disc) = " + std::to_string(c.discriminant_valuation));
  return r;
}

Report cmd_tate(const std::string& curve, const std::string& field_spec, const RunConfig& cfg) {
  FieldSpec s = FieldSpec::parse(field_spec);
  CurveSpec c = CurveSpec::parse(curve);
  LocalField K = LocalField::build(s, cfg.precision);
  ReductionData d = checked(tate_algorithm(WeierstrassModel::over(K, c), cfg.budget));
  Report r;
  r.data = reduction_json(d);
  r.data["field"] = s.to_string();
  r.data["curve"] = c.to_string();
  if (d.kodaira.type == Kodaira::Type::In) r.data["split"] = d.split;
  r.csv_header = {"curve", "v_disc", "f", "kodaira", "tamagawa", "m"};
  r.csv_rows = {{c.to_string(), std::to_string(d.v_min_disc), std::to_string(d.conductor_exponent),
                 d.kodaira.to_string(), std::to_string(d.tamagawa), std::to_string(d.components)}};
  r.pretty = {d.bracket()};
  return r;
}

TableId parse_table_id(const std::string& name) {
  if (name == "1" || name == "discriminants") return TableId::Discriminants;
  if (name == "elliptic-additive" || name == "2") return TableId::EllipticAdditive;
  if (name == "elliptic-semistable" || name == "3") return TableId::EllipticSemistable;
  throw DomainError("unknown table '" + name + "' (1, elliptic-additive, elliptic-semistable)");
}

namespace {

std::vector<GoldenDiscRow> disc_rows_from_text(const std::string& text) {
  std::vector<GoldenDiscRow> out;
  for (const auto& raw : split(text, '\n')) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto parts = split(line, '|');
    if (parts.size() > 2) throw DomainError("table 1 row has too many fields: " + line);
    GoldenDiscRow row{trim(parts[0]), -1};
    if (parts.size() == 2) row.v_disc = std::stol(trim(parts[1]));
    out.push_back(row);
  }
  return out;
}

std::vector<GoldenCurveRow> curve_rows_from_text(const std::string& text) {
  std::vector<GoldenCurveRow> out;
  for (const auto& raw : split(text, '\n')) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto parts = split(line, '|');
    if (parts.size() != 3 && parts.size() != 5)
      throw DomainError("elliptic row needs curve | K | L [| expected K | expected L]: " + line);
    GoldenCurveRow row{trim(parts[0]), trim(parts[1]), trim(parts[2]), "", "", "user row"};
    if (parts.size() == 5) {
      row.expected_k = trim(parts[3]);
      row.expected_l = trim(parts[4]);
    }
    out.push_back(row);
  }
  return out;
}

Report table_discriminants(std::vector<GoldenDiscRow> rows, const RunConfig& cfg) {
  std::vector<long> got(rows.size());
  parallel_for_ordered(rows.size(), cfg.threads, [&](size_t i) {
    LocalField K = LocalField::build(FieldSpec::parse("p=3 r=2 rad=" + rows[i].radicand), cfg.precision);
    got[i] = discriminant_valuation(K);
  });
  Report r;
  r.data = json::array();
  r.csv_header = {"radicand", "v_disc", "expected", "match"};
  long bad = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const bool has = rows[i].v_disc >= 0;
    const bool ok = !has || got[i] == rows[i].v_disc;
    bad += !ok;
    json rec{{"radicand", rows[i].radicand}, {"v_disc", got[i]}, {"match", ok}};
    if (has) rec["expected"] = rows[i].v_disc;
    r.data.push_back(rec);
    r.csv_rows.push_back({rows[i].radicand, std::to_string(got[i]), has ? std::to_string(rows[i].v_disc) : "",
                          ok ? "true" : "false"});
    std::string line = "[" + rows[i].radicand + ", " + std::to_string(got[i]) + "]";
    if (!ok) line += "  MISMATCH, expected " + std::to_string(rows[i].v_disc);
    r.pretty.push_back(line);
  }
  if (bad) r.log.push_back(std::to_string(bad) + " row(s) differ from the expected values");
  r.exit_code = bad ? 1 : 0;
  return r;
}

Report table_curves(std::vector<GoldenCurveRow> rows, const RunConfig& cfg) {
  std::vector<AmphoricityReport> got(rows.size());
  parallel_for_ordered(rows.size(), cfg.threads, [&](size_t i) {
    LocalField K = LocalField::build(FieldSpec::parse(rows[i].field_k), cfg.precision);
    LocalField L = LocalField::build(FieldSpec::parse(rows[i].field_l), cfg.precision);
    got[i] = weak_amphoricity_report(CurveSpec::parse(rows[i].curve), K, L, cfg.budget);
    checked(got[i].over_k);
    checked(got[i].over_l);
  });
  Report r;
  r.data = json::array();
  r.csv_header = {"curve", "K", "L", "expected_K", "expected_L", "match"};
  long bad = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const std::string k = got[i].over_k.bracket(), l = got[i].over_l.bracket();
    const bool has = !row.expected_k.empty();
    const bool ok = !has || (k == row.expected_k && l == row.expected_l);
    bad += !ok;
    json rec{{"curve", row.curve},
             {"field_k", row.field_k},
             {"field_l", row.field_l},
             {"K", reduction_json(got[i].over_k)},
             {"L", reduction_json(got[i].over_l)},
             {"flags",
              {{"v_disc", got[i].same_disc},
               {"f", got[i].same_conductor},
               {"kodaira", got[i].same_kodaira},
               {"tamagawa", got[i].same_tamagawa}}},
             {"match", ok}};
    if (has) {
      rec["expected_k"] = row.expected_k;
      rec["expected_l"] = row.expected_l;
    }
    r.data.push_back(rec);
    r.csv_rows.push_back({row.curve, k, l, row.expected_k, row.expected_l, ok ? "true" : "false"});
    std::string line = row.curve + "  " + k + "  " + l;
    if (!ok) line += "  MISMATCH, expected " + row.expected_k + " " + row.expected_l;
    r.pretty.push_back(line);
  }
  if (bad) r.log.push_back(std::to_string(bad) + " row(s) differ from the expected values");
  r.exit_code = bad ? 1 : 0;
  return r;
}

}  // namespace

Report cmd_table(TableId id, const std::string* rows_text, long first_n, const RunConfig& cfg) {
  auto take = [first_n](auto v) {
    if (first_n >= 0 && static_cast<size_t>(first_n) < v.size()) v.resize(first_n);
    return v;
  };
  if (id == TableId::Discriminants)
    return table_discriminants(take(rows_text ? disc_rows_from_text(*rows_text) : discriminant_rows()), cfg);
  std::vector<GoldenCurveRow> rows;
  if (rows_text)
    rows = curve_rows_from_text(*rows_text);
  else
    rows = id == TableId::EllipticAdditive ? additive_rows() : semistable_rows();
  for (auto& row : rows) {
    // Golden rows store steps on separate lines; user rows use ';'.
    std::replace(row.field_k.begin(), row.field_k.end(), ';', '\n');
    std::replace(row.field_l.begin(), row.field_l.end(), ';', '\n');
  }
  return table_curves(take(rows), cfg);
}

SearchFilter parse_search_filter(const std::string& name) {
  if (name == "any") return SearchFilter::Any;
  if (name == "semistable") return SearchFilter::Semistable;
  if (name == "additive") return SearchFilter::Additive;
  throw DomainError("unknown filter '" + name + "' (any, semistable, additive)");
}

std::vector<std::string> search_candidates(std::uint64_t seed, long how_many, long z_degree) {
  // mt19937_64 output is fixed by the standard; reduce it by hand instead of
  // using distributions, whose algorithms are implementation-defined.
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  auto coeff = [&](long spread) {
    RationalPoly f(mpq_class(uniform(-spread, spread)));
    for (long d = 1; d <= z_degree; ++d) {
      // mostly small entries, like the tabulated curves
      long c = uniform(0, 3) == 0 ? uniform(-12, 12) : uniform(-2, 2);
      f += RationalPoly(mpq_class(c)) * RationalPoly::variable("z").pow(d);
    }
    return f.to_string();
  };
  std::vector<std::string> out;
  for (long i = 0; i < how_many; ++i) {
    std::string a2 = coeff(60), a4 = coeff(120), a6 = coeff(120);
    out.push_back("[0, " + a2 + ", 0, " + a4 + ", " + a6 + "]");
  }
  return out;
}

Report cmd_search(const SearchOptions& opt, const RunConfig& cfg) {
  if (opt.count < 0) throw DomainError("search count must be non-negative");
  FieldSpec sk = FieldSpec::parse(opt.field_k), sl = FieldSpec::parse(opt.field_l);
  LocalField K = LocalField::build(sk, cfg.precision);
  LocalField L = LocalField::build(sl, cfg.precision);
  const long zdeg = std::min(cyclotomic_z_degree(sk), cyclotomic_z_degree(sl));
  const long attempts = opt.max_attempts > 0 ? opt.max_attempts : 50 * std::max<long>(opt.count, 1);
  const std::vector<std::string> cands = search_candidates(cfg.seed, attempts, zdeg);

  struct Outcome {
    bool done = false;
    bool kept = false;
    std::string skip;
    AmphoricityReport rep;
  };
  std::vector<Outcome> res(cands.size());
  auto semistable = [](const ReductionData& d) {
    return d.kodaira.type == Kodaira::Type::I0 || d.kodaira.type == Kodaira::Type::In;
  };
  auto evaluate = [&](size_t i) {
    Outcome& o = res[i];
    o.done = true;
    try {
      CurveSpec c = CurveSpec::parse(cands[i]);
      ReductionData dk = checked(tate_algorithm(WeierstrassModel::over(K, c), cfg.budget));
      const bool ss = semistable(dk);
      if ((opt.filter == SearchFilter::Semistable && !ss) || (opt.filter == SearchFilter::Additive && ss)) return;
      ReductionData dl = checked(tate_algorithm(WeierstrassModel::over(L, c), cfg.budget));
      o.rep.over_k = dk;
      o.rep.over_l = dl;
      o.rep.same_disc = dk.v_min_disc == dl.v_min_disc;
      o.rep.same_conductor = dk.conductor_exponent == dl.conductor_exponent;
      o.rep.same_kodaira = dk.kodaira == dl.kodaira;
      o.rep.same_tamagawa = dk.tamagawa == dl.tamagawa;
      o.kept = true;
    } catch (const PrecisionError& e) {
      o.skip = std::string("precision: ") + e.what();
    } catch (const DomainError& e) {
      o.skip = e.what();
    }
  };

  // Evaluate in batches, accept in candidate order: output does not depend
  // on the number of threads.
  Report r;
  r.data = json::array();
  r.csv_header = {"index", "curve", "K", "L", "same_v_disc", "same_f", "same_kodaira", "same_tamagawa"};
  const unsigned t = worker_count(cfg.threads, cands.size());
  long emitted = 0;
  size_t pos = 0;
  while (emitted < opt.count && pos < cands.size()) {
    const size_t batch = std::min(cands.size() - pos, static_cast<size_t>(t));
    parallel_for_ordered(batch, t, [&](size_t j) { evaluate(pos + j); });
    for (size_t j = 0; j < batch && emitted < opt.count; ++j) {
      const size_t i = pos + j;
      const Outcome& o = res[i];
      if (!o.skip.empty()) {
        r.log.push_back("skip #" + std::to_string(i) + ": " + o.skip);
        continue;
      }
      if (!o.kept) continue;
      ++emitted;
      const auto& rep = o.rep;
      auto b = [](bool x) { return x ? "true" : "false"; };
      r.data.push_back(json{{"index", i},
                            {"curve", cands[i]},
                            {"K", reduction_json(rep.over_k)},
                            {"L", reduction_json(rep.over_l)},
                            {"flags",
                             {{"v_disc", rep.same_disc},
                              {"f", rep.same_conductor},
                              {"kodaira", rep.same_kodaira},
                              {"tamagawa", rep.same_tamagawa}}}});
      r.csv_rows.push_back({std::to_string(i), cands[i], rep.over_k.bracket(), rep.over_l.bracket(), b(rep.same_disc),
                            b(rep.same_conductor), b(rep.same_kodaira), b(rep.same_tamagawa)});
      std::string line = "#" + std::to_string(i) + "  " + cands[i] + "  " + rep.over_k.bracket() + "  " +
                         rep.over_l.bracket();
      if (!rep.all_equal()) line += "  differs";
      r.pretty.push_back(line);
      if (opt.filter == SearchFilter::Semistable && !rep.all_equal())
        r.log.push_back("finding: semistable curve #" + std::to_string(i) + " has differing invariants");
    }
    pos += batch;
  }
  if (emitted < opt.count)
    r.log.push_back("search budget exhausted: " + std::to_string(emitted) + " of " + std::to_string(opt.count) +
                    " rows after " + std::to_string(cands.size()) + " candidates");
  return r;
}

}  // namespace anabelkit
