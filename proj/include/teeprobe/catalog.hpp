#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "teeprobe/info_quantity.hpp"

namespace teeprobe {

/// {"name":..., "parties":[...], "terms":[{"coeff":"-3/2","region":["A","B"]}, ...]}
nlohmann::json to_json(const InfoQuantity& q);

/// Strict reader for the quantity object above. Coefficients must be rational
/// strings (or JSON integers); regions must be nonempty subsets of the
/// parties and may not repeat.
InfoQuantity quantity_from_json(const nlohmann::json& j);

struct CatalogEntry {
  InfoQuantity quantity;
  std::optional<bool> facet;
  std::string source;
};

/// Accepts {"quantities":[...]} or a bare array. Errors name the offending
/// entry index; duplicate names are rejected.
std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);
nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries);

/// SA, MMI, cyclic 5/7/9, Q61, Q62.
std::vector<CatalogEntry> starter_catalog();

}  // namespace teeprobe
