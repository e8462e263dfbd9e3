#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "teeprobe/anyon.hpp"
#include "teeprobe/arrangement.hpp"
#include "teeprobe/catalog.hpp"
#include "teeprobe/entropy_algebra.hpp"
#include "teeprobe/tqft_eval.hpp"

namespace teeprobe {

/// paper, additive or area-law.
enum class ScanMode { paper, additive, area_law };

std::string_view to_string(ScanMode m);
ScanMode parse_scan_mode(std::string_view s);

struct ScanOptions {
  std::vector<ScanMode> modes{ScanMode::paper};
  std::vector<AnyonModel> models;
  bool strict = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ScanRow {
  enum class Status { ok, skipped, error };

  std::size_t entry = 0;
  std::string quantity;
  int party_count = 0;
  std::optional<bool> facet;
  std::string geometry;
  ScanMode mode = ScanMode::paper;
  Status status = Status::ok;
  std::string message;

  Classification classification = Classification::unbalanced;
  Rational sum_coeffs;
  std::optional<SymEntropy> value;  // TQFT modes
  std::optional<AreaLawExpr> area_law;
  bool topological = false;
  /// Topological with a nonnegative value.
  bool nonnegative = false;
  std::optional<bool> sum_rule;
  std::vector<std::pair<std::string, double>> numeric;  // model -> value
  double wall_ms = 0;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  std::vector<std::string> models;

  /// Facet entries (three or more parties) that are not topological and
  /// nonnegative in paper mode.
  std::vector<const ScanRow*> facet_failures() const;
  std::string summary() const;
};

/// Evaluates every catalog entry on every geometry in every mode. Work runs on
/// a thread pool; rows come back ordered by (entry, geometry, mode) in input
/// order.
ScanReport run_scan(const std::vector<CatalogEntry>& catalog, const std::vector<Arrangement>& geometries,
                    const ScanOptions& options);

nlohmann::json to_json(const ScanReport& report, bool with_timing = false);
std::string to_csv(const ScanReport& report, bool with_timing = false);

}  // namespace teeprobe
