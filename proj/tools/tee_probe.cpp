#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "teeprobe/anyon.hpp"
#include "teeprobe/arrangement.hpp"
#include "teeprobe/catalog.hpp"
#include "teeprobe/dsl.hpp"
#include "teeprobe/entropy_algebra.hpp"
#include "teeprobe/errors.hpp"
#include "teeprobe/generators.hpp"
#include "teeprobe/scan.hpp"
#include "teeprobe/tqft_eval.hpp"

namespace {

using namespace teeprobe;
using nlohmann::json;

enum Exit { kOk = 0, kFailure = 1, kInput = 2, kUnsupported = 3 };

struct Globals {
  std::string format = "table";
  std::string log_level = "warn";
  bool json() const { return format == "json"; }
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json_file(const std::filesystem::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InputError("cannot parse " + path.string() + ": " + e.what());
  }
}

/// A quantity JSON or DSL file, a generator shorthand, or inline DSL.
InfoQuantity load_quantity(const std::string& ref) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(ref, ec)) {
    const std::string text = read_file(ref);
    const auto first = text.find_first_not_of(" \t\r\n");
    InfoQuantity q = first != std::string::npos && text[first] == '{' ? quantity_from_json(parse_json_file(ref))
                                                                      : parse(text);
    if (q.name().empty()) q.set_name(std::filesystem::path(ref).stem().string());
    return q;
  }
  InfoQuantity q = quantity_from_reference(ref);
  if (q.name().empty()) q.set_name(ref);
  return q;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

int k_max_from_env() {
  const char* env = std::getenv("TEE_PROBE_KMAX");
  if (!env || !*env) return 8;
  try {
    std::size_t used = 0;
    const int k = std::stoi(env, &used);
    if (used != std::string(env).size() || k < 1) throw std::invalid_argument("range");
    return k;
  } catch (const std::exception&) {
    throw InputError(std::string("TEE_PROBE_KMAX must be a positive integer, got '") + env + "'");
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ------------------------------------------------------------- generate

struct GenerateArgs {
  std::string kind;
  int n = 0;
  std::string name;
  std::vector<std::string> parties;
  std::vector<std::string> chosen;
};

int cmd_generate(const Globals& g, const GenerateArgs& a) {
  if (a.kind == "catalog") {
    std::cout << catalog_to_json(starter_catalog()).dump(2) << '\n';
    return kOk;
  }
  InfoQuantity q;
  const auto parties = split_list(a.parties);
  if (a.kind == "In" || a.kind == "multi-information") {
    if (!parties.empty()) {
      q = gen_multi_information(parties);
    } else {
      if (a.n < 1) throw InputError("generate In needs --n >= 1 or --parties");
      q = gen_multi_information(a.n);
    }
  } else if (a.kind == "cyclic") {
    q = gen_cyclic(a.n);
  } else if (a.kind == "named") {
    if (a.name.empty()) {
      throw InputError(fmt::format("generate named needs --name ({})", fmt::join(named_quantity_names(), ", ")));
    }
    q = gen_named(a.name);
  } else if (a.kind == "partial") {
    const auto chosen = split_list(a.chosen);
    const auto universe = parties.empty() ? default_labels(a.n) : parties;
    q = gen_partial_multi_information(chosen, universe);
  } else {
    throw InputError("unknown generator kind '" + a.kind + "' (expected In, cyclic, named, partial, catalog)");
  }
  if (g.json()) {
    std::cout << to_json(q).dump(2) << '\n';
  } else {
    std::cout << render(q) << '\n';
  }
  return kOk;
}

// -------------------------------------------------------------- analyze

int cmd_analyze(const Globals& g, const std::string& ref) {
  const InfoQuantity q = load_quantity(ref);
  const auto profile = balance_profile(q);
  const Rational c = sum_coeffs(q);
  const auto cls = classify(q);
  constexpr std::size_t kMaxWitnesses = 16;
  if (g.json()) {
    json slices = json::array();
    for (const auto& s : profile.slices) {
      json viol = json::array();
      for (std::size_t i = 0; i < s.violations.size() && i < kMaxWitnesses; ++i) {
        viol.push_back({{"cluster", q.labels(s.violations[i].cluster)}, {"residue", to_string(s.violations[i].residue)}});
      }
      slices.push_back({{"k", s.k}, {"balanced", s.balanced}, {"violation_count", s.violations.size()},
                        {"violations", viol}});
    }
    json out{{"name", q.name()},
             {"parties", q.parties()},
             {"term_count", q.term_count()},
             {"sum_coeffs", to_string(c)},
             {"ghz_value_log2", to_string(ghz_value(q))},
             {"max_balanced_k", profile.max_balanced_k()},
             {"balance", slices},
             {"classification", to_string(cls)}};
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  fmt::print("quantity: {} ({} parties, {} terms)\n", q.name(), q.party_count(), q.term_count());
  fmt::print("  {}\n", render(q));
  std::vector<std::string> parts;
  for (const auto& s : profile.slices) {
    if (s.balanced) {
      parts.push_back(fmt::format("{}-balanced yes", s.k));
    } else {
      std::vector<std::string> w;
      for (std::size_t i = 0; i < s.violations.size() && i < 3; ++i) {
        w.push_back(render_region(q.labels(s.violations[i].cluster)) + " " + to_string(s.violations[i].residue));
      }
      if (s.violations.size() > 3) w.push_back(fmt::format("... {} total", s.violations.size()));
      parts.push_back(fmt::format("{}-balanced no ({})", s.k, fmt::join(w, ", ")));
    }
  }
  fmt::print("balance: {}\n", fmt::join(parts, "; "));
  fmt::print("{}; c = {}\n", to_string(cls), to_string(c));
  fmt::print("GHZ value: {} log 2\n", to_string(ghz_value(q)));
  return kOk;
}

// ----------------------------------------------------------------- eval

struct EvalArgs {
  std::string quantity;
  std::string geometry;
  std::string mode = "paper";
  std::string model;
  bool compare = false;
  bool tally = false;
  bool strict = false;
};

json tqft_result_json(const InfoQuantity& q, EvalMode mode, const SymEntropy& v, const std::optional<AnyonModel>& m,
                      const Tally* tally) {
  const Rational c = sum_coeffs(q);
  json j{{"mode", std::string(to_string(mode))},
         {"c_logD", to_string(v.c_logD)},
         {"c_K", to_string(v.c_K)},
         {"value", to_string(v)},
         {"topological", v.c_K == 0}};
  if (mode == EvalMode::paper && v.c_K == 0) j["sum_rule"] = v.c_logD == -c;
  if (v.c_K == 0 && c != 0) j["s_topo_logD"] = to_string(Rational(v.c_logD / -c));
  if (m) j["numeric"] = {{"model", m->name()}, {"value", evaluate_numeric(v, *m)}};
  if (tally) j["tally"] = to_json(*tally);
  return j;
}

void print_tally(const Tally& t) {
  std::size_t width = 4;
  std::vector<std::string> names;
  for (const auto& term : t.terms) {
    names.push_back("S(" + render_region(term.region) + ")");
    width = std::max(width, names.back().size());
  }
  fmt::print("  {:<{}}  {:>6}  spheres\n", "term", width, "coeff");
  for (std::size_t i = 0; i < t.terms.size(); ++i) {
    std::vector<std::string> s;
    for (int k : t.terms[i].spheres) s.push_back("S_" + std::to_string(k));
    fmt::print("  {:<{}}  {:>6}  {}\n", names[i], width, to_string(t.terms[i].coeff), fmt::join(s, " + "));
  }
  fmt::print("  aggregate: {}\n", to_string(t));
}

void print_tqft(const InfoQuantity& q, EvalMode mode, const SymEntropy& v, const std::optional<AnyonModel>& m,
                const Tally* tally) {
  const Rational c = sum_coeffs(q);
  fmt::print("{} mode: {}\n", to_string(mode), to_string(v));
  fmt::print("  topological: {}", yes_no(v.c_K == 0));
  if (v.c_K == 0 && c != 0) fmt::print(" (S_topo = {} logD)", to_string(Rational(v.c_logD / -c)));
  fmt::print("\n");
  if (mode == EvalMode::paper && v.c_K == 0) fmt::print("  value = -c logD: {}\n", yes_no(v.c_logD == -c));
  if (m) fmt::print("  numeric ({}): {:.10g}\n", m->name(), evaluate_numeric(v, *m));
  if (tally) print_tally(*tally);
}

int cmd_eval(const Globals& g, const EvalArgs& a) {
  const InfoQuantity q = load_quantity(a.quantity);
  const Arrangement geo = resolve_arrangement(a.geometry);
  std::optional<AnyonModel> model;
  if (!a.model.empty()) {
    model = resolve_model(a.model);
    require_valid(*model);
  }
  spdlog::info("evaluating {} ({} terms) on {}", q.name(), q.term_count(), geo.name());

  std::vector<std::string> modes;
  if (a.compare) {
    modes = {"paper", "additive", "area-law"};
  } else {
    parse_scan_mode(a.mode);
    modes = {a.mode};
  }
  json results = json::array();
  if (!g.json()) fmt::print("quantity: {}  geometry: {}  c = {}\n", q.name(), geo.name(), to_string(sum_coeffs(q)));
  for (const auto& mode_name : modes) {
    if (parse_scan_mode(mode_name) == ScanMode::area_law) {
      const AreaLawExpr v = eval_area_law(q, geo);
      if (g.json()) {
        json j = to_json(v, geo);
        j["mode"] = "area-law";
        j["topological"] = v.lengths_vanish();
        if (model && v.lengths_vanish()) {
          j["numeric"] = {{"model", model->name()}, {"value", v.c_gamma.get_d() * derived_scalars(*model).log_D}};
        }
        results.push_back(j);
      } else {
        fmt::print("area-law mode: {}\n", to_string(v, geo));
        fmt::print("  topological: {}\n", yes_no(v.lengths_vanish()));
      }
      continue;
    }
    const EvalMode mode = parse_eval_mode(mode_name);
    Tally tally;
    const SymEntropy v = eval_tqft(q, geo, {mode, a.strict}, a.tally ? &tally : nullptr);
    if (g.json()) {
      results.push_back(tqft_result_json(q, mode, v, model, a.tally ? &tally : nullptr));
    } else {
      print_tqft(q, mode, v, model, a.tally ? &tally : nullptr);
    }
  }
  if (g.json()) {
    if (results.size() == 1) {
      json out = results[0];
      out["quantity"] = q.name();
      out["geometry"] = geo.name();
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << json{{"quantity", q.name()}, {"geometry", geo.name()}, {"results", results}}.dump(2) << '\n';
    }
  }
  return kOk;
}

// ----------------------------------------------------------------- scan

struct ScanArgs {
  std::string catalog;
  std::vector<std::string> geometries{"kp_disk3", "pie5", "pie7"};
  std::vector<std::string> modes{"paper"};
  std::vector<std::string> models;
  std::string report;
  unsigned threads = 0;
  bool timing = false;
  bool strict = false;
};

void print_scan_table(const ScanReport& r) {
  fmt::print("{:>3}  {:<10} {:<16} {:<9} {:<8} {:<15} {:>6} {:>8} {:>6} {:>8}  {}\n", "#", "quantity", "geometry",
             "mode", "status", "class", "c", "c_logD", "c_K", "c_gamma", "topological");
  for (const auto& row : r.rows) {
    const bool ok = row.status == ScanRow::Status::ok;
    fmt::print("{:>3}  {:<10} {:<16} {:<9} {:<8} {:<15} {:>6} {:>8} {:>6} {:>8}  {}\n", row.entry, row.quantity,
               row.geometry, to_string(row.mode),
               row.status == ScanRow::Status::ok ? "ok" : row.status == ScanRow::Status::skipped ? "skipped" : "error",
               to_string(row.classification), to_string(row.sum_coeffs),
               ok && row.value ? to_string(row.value->c_logD) : "-", ok && row.value ? to_string(row.value->c_K) : "-",
               ok && row.area_law ? to_string(row.area_law->c_gamma) : "-", ok ? yes_no(row.topological) : "-");
  }
}

int cmd_scan(const Globals& g, const ScanArgs& a) {
  const auto catalog = a.catalog.empty() ? starter_catalog() : load_catalog(a.catalog);
  std::vector<Arrangement> geometries;
  for (const auto& ref : split_list(a.geometries)) {
    geometries.push_back(resolve_arrangement(ref));
    geometries.back().require_valid();
  }
  ScanOptions opt;
  opt.modes.clear();
  for (const auto& m : split_list(a.modes)) opt.modes.push_back(parse_scan_mode(m));
  for (const auto& m : split_list(a.models)) {
    opt.models.push_back(resolve_model(m));
    require_valid(opt.models.back());
  }
  opt.strict = a.strict;
  opt.threads = a.threads;
  spdlog::info("scanning {} quantities x {} geometries x {} modes", catalog.size(), geometries.size(),
               opt.modes.size());
  const ScanReport report = run_scan(catalog, geometries, opt);

  if (!a.report.empty()) {
    const std::filesystem::path path(a.report);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write report " + path.string());
    if (path.extension() == ".csv") {
      out << to_csv(report, a.timing);
    } else {
      out << to_json(report, a.timing).dump(2) << '\n';
    }
    fmt::print("{}\n", report.summary());
  } else if (g.json()) {
    std::cout << to_json(report, a.timing).dump(2) << '\n';
  } else {
    print_scan_table(report);
    fmt::print("{}\n", report.summary());
  }
  for (const auto* row : report.facet_failures()) {
    spdlog::error("facet entry {} fails on {} (paper mode)", row->quantity, row->geometry);
  }
  return report.facet_failures().empty() ? kOk : kFailure;
}

// --------------------------------------------------------------- oracle

int cmd_oracle(const Globals& g, const std::string& model_ref, int punctures) {
  const AnyonModel m = resolve_model(model_ref);
  const auto report = validate_model(m);
  if (!report.valid()) {
    throw InputError("invalid anyon model " + m.name() + ": " + fmt::format("{}", fmt::join(report.violations, "; ")));
  }
  const int k_max = k_max_from_env();
  if (punctures < 2) throw InputError("--punctures must be at least 2");
  if (punctures > k_max) {
    throw InputError(fmt::format("--punctures {} exceeds k_max = {} (set TEE_PROBE_KMAX)", punctures, k_max));
  }
  const auto s = derived_scalars(m);
  bool all_pass = true;
  json rows = json::array();
  struct Row {
    int k;
    double closed, brute, delta, marginal;
    bool pass;
  };
  std::vector<Row> table;
  for (int k = 2; k <= punctures; ++k) {
    const auto r = brute_force_entropy(m, k, k_max);
    double marginal = 0;
    for (const auto& site : r.marginals) {
      for (std::size_t a = 0; a < site.size(); ++a) marginal = std::max(marginal, std::abs(site[a] - s.P[a]));
    }
    const double delta = std::abs(r.entropy - r.closed_form);
    const bool pass = delta < kModelTolerance && marginal < kModelTolerance;
    all_pass = all_pass && pass;
    table.push_back({k, r.closed_form, r.entropy, delta, marginal, pass});
    rows.push_back({{"k", k}, {"closed_form", r.closed_form}, {"brute_force", r.entropy}, {"delta", delta},
                    {"marginal_delta", marginal}, {"pass", pass}});
  }
  if (g.json()) {
    std::cout << json{{"model", m.name()}, {"D", s.D}, {"log_D", s.log_D}, {"K", s.K}, {"k_max", k_max},
                      {"tolerance", kModelTolerance}, {"rows", rows}, {"pass", all_pass}}
                     .dump(2)
              << '\n';
  } else {
    fmt::print("model {}: D = {:.12g}, log D = {:.12g}, K = {:.12g}\n", m.name(), s.D, s.log_D, s.K);
    fmt::print("{:>3}  {:>18}  {:>18}  {:>10}  {:>10}  {}\n", "k", "closed form", "brute force", "delta",
               "marginal", "status");
    for (const auto& r : table) {
      fmt::print("{:>3}  {:>18.12f}  {:>18.12f}  {:>10.2e}  {:>10.2e}  {}\n", r.k, r.closed, r.brute, r.delta,
                 r.marginal, r.pass ? "pass" : "FAIL");
    }
  }
  return all_pass ? kOk : kFailure;
}

// ------------------------------------------------------------- geometry

int cmd_geometry(const Globals& g, const std::string& action, const std::string& ref) {
  const Arrangement a = resolve_arrangement(ref);
  if (action == "export") {
    std::cout << to_json(a).dump(2) << '\n';
    return kOk;
  }
  if (action == "validate") {
    if (g.json()) {
      std::cout << json{{"name", a.name()}, {"valid", a.valid()}, {"violations", a.validation().violations}}.dump(2)
                << '\n';
    } else {
      fmt::print("{}: {}\n", a.name().empty() ? ref : a.name(), a.valid() ? "valid" : "INVALID");
      for (const auto& v : a.validation().violations) fmt::print("  {}\n", v);
    }
    return a.valid() ? kOk : kFailure;
  }
  const auto d = describe(a);
  if (g.json()) {
    std::cout << to_json(d).dump(2) << '\n';
  } else {
    std::cout << to_text(d);
  }
  return a.valid() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tee-probe: topological entanglement entropy probes on planar geometries"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--log-level", g.log_level, "trace, debug, info, warn, error, off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "critical", "off"}));

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a quantity (In, cyclic, named, partial) or the starter catalog");
  generate->add_option("kind", gen.kind, "In | cyclic | named | partial | catalog")->required();
  generate->add_option("--n", gen.n, "Party count");
  generate->add_option("--name", gen.name, "Named quantity (SA, MMI, KP, LW, Q61, Q62)");
  generate->add_option("--parties", gen.parties, "Explicit party labels (comma separated)");
  generate->add_option("--chosen", gen.chosen, "Parties of a partial multi-information");

  std::string analyze_ref;
  auto* analyze = app.add_subcommand("analyze", "Balance profile, sum of coefficients and classification");
  analyze->add_option("quantity", analyze_ref, "Quantity file, shorthand or DSL text");
  analyze->add_option("--q", analyze_ref, "Quantity file, shorthand or DSL text");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a quantity on a geometry");
  eval->add_option("--q,--quantity", ev.quantity, "Quantity file, shorthand or DSL text")->required();
  eval->add_option("--geometry", ev.geometry, "Builtin geometry or arrangement JSON file")->required();
  eval->add_option("--mode", ev.mode, "paper | additive | area-law");
  eval->add_option("--model", ev.model, "Anyon model name or JSON file for a numeric value");
  eval->add_flag("--compare-modes", ev.compare, "Evaluate in all three modes");
  eval->add_flag("--tally", ev.tally, "Show the per-term sphere tally");
  eval->add_flag("--strict", ev.strict, "Reject unions whose doubled surface is not a sphere");

  ScanArgs sc;
  auto* scan = app.add_subcommand("scan", "Evaluate a catalog over geometries and modes");
  scan->add_option("--catalog", sc.catalog, "Catalog JSON (default: builtin starter catalog)");
  scan->add_option("--geometries", sc.geometries, "Geometries (comma separated)");
  scan->add_option("--modes", sc.modes, "Modes (comma separated)");
  scan->add_option("--models", sc.models, "Anyon models for numeric values");
  scan->add_option("--report", sc.report, "Write the report to a .json or .csv file");
  scan->add_option("--threads", sc.threads, "Worker threads (default: all cores)");
  scan->add_flag("--timing", sc.timing, "Include wall time per row");
  scan->add_flag("--strict", sc.strict, "Strict hole policy in TQFT modes");

  std::string model_ref;
  int punctures = 0;
  auto* oracle = app.add_subcommand("oracle", "Compare closed-form and brute-force sphere entropies");
  oracle->add_option("--model", model_ref, "Anyon model name or JSON file")->required();
  oracle->add_option("--punctures", punctures, "Largest puncture count")->required();

  std::string geo_action, geo_ref;
  auto* geometry = app.add_subcommand("geometry", "Validate, describe or export an arrangement");
  geometry->add_option("action", geo_action, "validate | describe | export")
      ->required()
      ->check(CLI::IsMember({"validate", "describe", "export"}));
  geometry->add_option("geometry", geo_ref, "Builtin geometry or arrangement JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  auto logger = spdlog::stderr_color_st("tee-probe");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::from_str(g.log_level));

  try {
    if (*generate) return cmd_generate(g, gen);
    if (*analyze) {
      if (analyze_ref.empty()) throw InputError("analyze needs a quantity");
      return cmd_analyze(g, analyze_ref);
    }
    if (*eval) return cmd_eval(g, ev);
    if (*scan) return cmd_scan(g, sc);
    if (*oracle) return cmd_oracle(g, model_ref, punctures);
    if (*geometry) return cmd_geometry(g, geo_action, geo_ref);
  } catch (const UnsupportedGeometry& e) {
    spdlog::error("{}", e.what());
    return kUnsupported;
  } catch (const InputError& e) {
    spdlog::error("{}", e.what());
    return kInput;
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
  return kOk;
}
