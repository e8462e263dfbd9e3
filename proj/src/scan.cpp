#include "teeprobe/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "teeprobe/errors.hpp"

namespace teeprobe {

std::string_view to_string(ScanMode m) {
  switch (m) {
    case ScanMode::paper:
      return "paper";
    case ScanMode::additive:
      return "additive";
    case ScanMode::area_law:
      return "area-law";
  }
  return "?";
}

ScanMode parse_scan_mode(std::string_view s) {
  if (s == "paper") return ScanMode::paper;
  if (s == "additive") return ScanMode::additive;
  if (s == "area-law" || s == "area_law") return ScanMode::area_law;
  throw InputError("unknown mode '" + std::string(s) + "' (expected paper, additive or area-law)");
}

namespace {

std::string_view to_string(ScanRow::Status s) {
  switch (s) {
    case ScanRow::Status::ok:
      return "ok";
    case ScanRow::Status::skipped:
      return "skipped";
    case ScanRow::Status::error:
      return "error";
  }
  return "?";
}

bool covers(const Arrangement& a, const InfoQuantity& q) {
  return std::all_of(q.parties().begin(), q.parties().end(), [&](const std::string& p) {
    const int f = a.face_index(p);
    return f >= 0 && f != a.outer_face();
  });
}

void evaluate_row(ScanRow& row, const InfoQuantity& q, const Arrangement& a, const ScanOptions& options,
                  const std::vector<DerivedScalars>& scalars) {
  const auto start = std::chrono::steady_clock::now();
  if (!covers(a, q)) {
    row.status = ScanRow::Status::skipped;
    row.message = "quantity parties are not all regions of this geometry";
    return;
  }
  try {
    if (row.mode == ScanMode::area_law) {
      auto check = topological_check_area_law(q, a);
      row.topological = check.topological;
      row.area_law = std::move(check.area_law);
      row.nonnegative = row.topological && row.area_law->c_gamma >= 0;
      if (row.topological) {
        for (std::size_t i = 0; i < scalars.size(); ++i) {
          row.numeric.emplace_back(options.models[i].name(), row.area_law->c_gamma.get_d() * scalars[i].log_D);
        }
      }
    } else {
      const EvalOptions eval{row.mode == ScanMode::paper ? EvalMode::paper : EvalMode::additive, options.strict};
      auto check = topological_check(q, a, eval);
      row.topological = check.topological;
      row.sum_rule = check.sum_rule;
      row.value = check.tqft;
      row.nonnegative = row.topological && row.value->c_logD >= 0;
      for (std::size_t i = 0; i < scalars.size(); ++i) {
        row.numeric.emplace_back(options.models[i].name(), evaluate_numeric(*row.value, scalars[i]));
      }
    }
  } catch (const Error& e) {
    row.status = ScanRow::Status::error;
    row.message = e.what();
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<const ScanRow*> ScanReport::facet_failures() const {
  std::vector<const ScanRow*> out;
  for (const auto& row : rows) {
    if (row.mode != ScanMode::paper || row.facet != true || row.status == ScanRow::Status::skipped) continue;
    // Two-party entries (subadditivity) are not topological by construction.
    if (row.party_count < 3) continue;
    if (row.status == ScanRow::Status::error || !row.nonnegative) out.push_back(&row);
  }
  return out;
}

std::string ScanReport::summary() const {
  std::ostringstream os;
  std::size_t skipped = 0, errors = 0;
  for (const auto& r : rows) {
    skipped += r.status == ScanRow::Status::skipped;
    errors += r.status == ScanRow::Status::error;
  }
  os << "scan: " << rows.size() << " rows (" << skipped << " skipped, " << errors << " errors)";
  for (ScanMode m : {ScanMode::paper, ScanMode::additive, ScanMode::area_law}) {
    std::size_t total = 0, topo = 0, nonneg = 0;
    for (const auto& r : rows) {
      if (r.mode != m || r.status != ScanRow::Status::ok) continue;
      ++total;
      topo += r.topological;
      nonneg += r.nonnegative;
    }
    if (total == 0) continue;
    os << "; " << to_string(m) << ": " << topo << "/" << total << " topological, " << nonneg << "/" << total
       << " topological and nonnegative";
  }
  os << "; facet failures: " << facet_failures().size();
  return os.str();
}

ScanReport run_scan(const std::vector<CatalogEntry>& catalog, const std::vector<Arrangement>& geometries,
                    const ScanOptions& options) {
  std::vector<DerivedScalars> scalars;
  for (const auto& m : options.models) scalars.push_back(derived_scalars(m));

  ScanReport report;
  for (const auto& m : options.models) report.models.push_back(m.name());
  const std::size_t per_entry = geometries.size() * options.modes.size();
  report.rows.resize(catalog.size() * per_entry);

  std::vector<Classification> classes;
  std::vector<Rational> sums;
  for (const auto& e : catalog) {
    classes.push_back(classify(e.quantity));
    sums.push_back(sum_coeffs(e.quantity));
  }
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const std::size_t entry = i / per_entry;
    const std::size_t g = (i % per_entry) / options.modes.size();
    ScanRow& row = report.rows[i];
    row.entry = entry;
    row.quantity = catalog[entry].quantity.name();
    row.party_count = catalog[entry].quantity.party_count();
    row.facet = catalog[entry].facet;
    row.geometry = geometries[g].name();
    row.mode = options.modes[i % options.modes.size()];
    row.classification = classes[entry];
    row.sum_coeffs = sums[entry];
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < report.rows.size(); i = next++) {
      ScanRow& row = report.rows[i];
      const std::size_t g = (i % per_entry) / options.modes.size();
      evaluate_row(row, catalog[row.entry].quantity, geometries[g], options, scalars);
    }
  };
  unsigned n = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, report.rows.size())));
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  try {
    worker();
  } catch (...) {
    failure = std::current_exception();
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return report;
}

nlohmann::json to_json(const ScanReport& report, bool with_timing) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json j{{"entry", r.entry},
                     {"quantity", r.quantity},
                     {"facet", r.facet ? nlohmann::json(*r.facet) : nlohmann::json(nullptr)},
                     {"geometry", r.geometry},
                     {"mode", to_string(r.mode)},
                     {"status", to_string(r.status)},
                     {"classification", to_string(r.classification)},
                     {"sum_coeffs", to_string(r.sum_coeffs)}};
    if (r.status == ScanRow::Status::ok) {
      if (r.value) {
        j["c_logD"] = to_string(r.value->c_logD);
        j["c_K"] = to_string(r.value->c_K);
      }
      if (r.area_law) {
        j["c_gamma"] = to_string(r.area_law->c_gamma);
        j["nonzero_lengths"] = r.area_law->length_coeffs.size();
      }
      j["topological"] = r.topological;
      j["nonnegative"] = r.nonnegative;
      if (r.sum_rule) j["sum_rule"] = *r.sum_rule;
      if (!r.numeric.empty()) {
        nlohmann::json num = nlohmann::json::object();
        for (const auto& [m, v] : r.numeric) num[m] = v;
        j["numeric"] = num;
      }
    } else {
      j["message"] = r.message;
    }
    if (with_timing) j["wall_ms"] = r.wall_ms;
    rows.push_back(std::move(j));
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const auto* r : report.facet_failures()) {
    failures.push_back({{"quantity", r->quantity}, {"geometry", r->geometry}});
  }
  return {{"rows", rows}, {"models", report.models}, {"facet_failures", failures}, {"summary", report.summary()}};
}

namespace {

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string to_csv(const ScanReport& report, bool with_timing) {
  std::ostringstream os;
  os << "entry,quantity,facet,geometry,mode,status,classification,sum_coeffs,c_logD,c_K,c_gamma,topological,"
        "nonnegative,sum_rule";
  for (const auto& m : report.models) os << ",numeric_" << csv_field(m);
  if (with_timing) os << ",wall_ms";
  os << ",message\n";
  for (const auto& r : report.rows) {
    const bool ok = r.status == ScanRow::Status::ok;
    os << r.entry << ',' << csv_field(r.quantity) << ',' << (r.facet ? (*r.facet ? "true" : "false") : "") << ','
       << csv_field(r.geometry) << ',' << to_string(r.mode) << ',' << to_string(r.status) << ','
       << to_string(r.classification) << ',' << to_string(r.sum_coeffs) << ','
       << (ok && r.value ? to_string(r.value->c_logD) : "") << ',' << (ok && r.value ? to_string(r.value->c_K) : "")
       << ',' << (ok && r.area_law ? to_string(r.area_law->c_gamma) : "") << ','
       << (ok ? (r.topological ? "true" : "false") : "") << ',' << (ok ? (r.nonnegative ? "true" : "false") : "")
       << ',' << (r.sum_rule ? (*r.sum_rule ? "true" : "false") : "");
    for (const auto& m : report.models) {
      os << ',';
      for (const auto& [name, v] : r.numeric) {
        if (name == m) os << format_double(v);
      }
    }
    if (with_timing) os << ',' << format_double(r.wall_ms);
    os << ',' << csv_field(r.message) << '\n';
  }
  return os.str();
}

}  // namespace teeprobe
