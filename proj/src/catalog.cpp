#include "teeprobe/catalog.hpp"

#include <fstream>
#include <set>

#include "teeprobe/errors.hpp"
#include "teeprobe/generators.hpp"

namespace teeprobe {

using nlohmann::json;

json to_json(const InfoQuantity& q) {
  json terms = json::array();
  for (const auto& [t, c] : q.terms()) {
    terms.push_back({{"coeff", to_string(c)}, {"region", q.labels(t)}});
  }
  json out = json::object();
  if (!q.name().empty()) out["name"] = q.name();
  out["parties"] = q.parties();
  out["terms"] = std::move(terms);
  return out;
}

InfoQuantity quantity_from_json(const json& j) {
  if (!j.is_object()) throw InputError("quantity must be a JSON object");
  if (!j.contains("parties") || !j["parties"].is_array()) throw InputError("quantity needs a \"parties\" array");
  if (!j.contains("terms") || !j["terms"].is_array()) throw InputError("quantity needs a \"terms\" array");
  std::vector<std::string> parties;
  for (const auto& p : j["parties"]) {
    if (!p.is_string()) throw InputError("party labels must be strings");
    parties.push_back(p.get<std::string>());
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  InfoQuantity q(parties, name);
  std::set<PartySet::Mask> seen;
  std::size_t index = 0;
  for (const auto& t : j["terms"]) {
    const std::string where = "term " + std::to_string(index++) + ": ";
    if (!t.is_object() || !t.contains("coeff") || !t.contains("region")) {
      throw InputError(where + "expected {\"coeff\":..., \"region\":[...]}");
    }
    Rational coeff;
    const auto& c = t["coeff"];
    if (c.is_string()) {
      try {
        coeff = parse_rational(c.get<std::string>());
      } catch (const InputError& e) {
        throw InputError(where + e.what());
      }
    } else if (c.is_number_integer()) {
      coeff = Rational(std::to_string(c.get<long long>()));
    } else {
      throw InputError(where + "coefficient must be a rational string such as \"3/2\"");
    }
    if (!t["region"].is_array() || t["region"].empty()) throw InputError(where + "region must be a nonempty array");
    std::vector<std::string> labels;
    for (const auto& l : t["region"]) {
      if (!l.is_string()) throw InputError(where + "region labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    PartySet region;
    try {
      region = q.region(labels);
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
    if (!seen.insert(region.bits()).second) throw InputError(where + "region listed twice");
    q.add_term(region, coeff);
  }
  return q;
}

std::vector<CatalogEntry> catalog_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("quantities")) throw InputError("catalog object needs a \"quantities\" array");
    list = &j["quantities"];
  }
  if (!list->is_array()) throw InputError("catalog must be an array of quantities");
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const auto& item = (*list)[i];
    try {
      CatalogEntry e{quantity_from_json(item), std::nullopt, {}};
      if (item.contains("facet")) {
        if (!item["facet"].is_boolean()) throw InputError("\"facet\" must be a boolean");
        e.facet = item["facet"].get<bool>();
      }
      if (item.contains("source")) {
        if (!item["source"].is_string()) throw InputError("\"source\" must be a string");
        e.source = item["source"].get<std::string>();
      }
      if (!e.quantity.name().empty() && !names.insert(e.quantity.name()).second) {
        throw InputError("duplicate name \"" + e.quantity.name() + "\"");
      }
      out.push_back(std::move(e));
    } catch (const InputError& e) {
      throw InputError("catalog entry " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("catalog " + path.string() + " is not valid JSON: " + e.what());
  }
  return catalog_from_json(j);
}

json catalog_to_json(const std::vector<CatalogEntry>& entries) {
  json list = json::array();
  for (const auto& e : entries) {
    json item = to_json(e.quantity);
    if (e.facet) item["facet"] = *e.facet;
    if (!e.source.empty()) item["source"] = e.source;
    list.push_back(std::move(item));
  }
  return json{{"quantities", std::move(list)}};
}

std::vector<CatalogEntry> starter_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({gen_named("SA"), true, "subadditivity"});
  out.push_back({gen_named("MMI"), true, "monogamy of mutual information"});
  for (int n : {5, 7, 9}) out.push_back({gen_cyclic(n), true, "cyclic family"});
  out.push_back({gen_named("Q61"), false, "valid non-facet inequality"});
  out.push_back({gen_named("Q62"), false, "superbalanced, holographically invalid"});
  return out;
}

}  // namespace teeprobe
