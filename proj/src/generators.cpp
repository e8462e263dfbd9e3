#include "teeprobe/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>

#include "teeprobe/dsl.hpp"
#include "teeprobe/errors.hpp"

namespace teeprobe {

namespace {

// Adds sign-alternating terms for every nonempty subset of `chosen`, in
// canonical order when `chosen` is the whole universe.
void add_inclusion_exclusion(InfoQuantity& q, const std::vector<int>& chosen) {
  const int m = static_cast<int>(chosen.size());
  std::vector<int> pick;
  for (int k = 1; k <= m; ++k) {
    const Rational sign = k % 2 == 1 ? 1 : -1;
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      PartySet s;
      for (int i : pick) s = s.with(chosen[i]);
      q.add_term(s, sign);
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

InfoQuantity from_terms(const char* name, const std::vector<std::string>& parties,
                        const std::vector<std::pair<int, const char*>>& terms) {
  InfoQuantity q(parties, name);
  for (const auto& [coeff, region] : terms) {
    PartySet s;
    for (const char* c = region; *c != '\0'; ++c) {
      const int i = q.party_index(std::string(1, *c));
      if (i < 0) throw std::logic_error("bad built-in term");
      s = s.with(i);
    }
    q.add_term(s, coeff);
  }
  return q;
}

}  // namespace

InfoQuantity gen_multi_information(int n) {
  if (n < 1) throw InputError("multi-information needs n >= 1");
  return gen_multi_information(default_labels(n));
}

InfoQuantity gen_multi_information(const std::vector<std::string>& parties) {
  if (parties.empty()) throw InputError("multi-information needs at least one party");
  InfoQuantity q(parties, "I" + std::to_string(parties.size()));
  // Subsets of size k in lexicographic order are already in basis order.
  const int n = q.party_count();
  std::vector<int> pick;
  for (int k = 1; k <= n; ++k) {
    const Rational sign = k % 2 == 1 ? 1 : -1;
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      PartySet s;
      for (int i : pick) s = s.with(i);
      q.append_term(s, sign);
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return q;
}

InfoQuantity gen_partial_multi_information(const std::vector<std::string>& chosen,
                                           const std::vector<std::string>& universe) {
  if (chosen.empty()) throw InputError("I_{m,n} needs at least one chosen party");
  InfoQuantity q(universe);
  std::vector<int> idx;
  for (const auto& c : chosen) {
    const int i = q.party_index(c);
    if (i < 0) throw InputError("chosen party \"" + c + "\" is not in the universe");
    if (std::find(idx.begin(), idx.end(), i) != idx.end()) throw InputError("chosen party \"" + c + "\" repeated");
    idx.push_back(i);
  }
  add_inclusion_exclusion(q, idx);
  q.set_name("I" + std::to_string(chosen.size()) + "," + std::to_string(universe.size()));
  return q;
}

InfoQuantity gen_cyclic(int party_count) {
  if (party_count < 3 || party_count % 2 == 0) {
    throw InputError("cyclic quantity needs an odd party count >= 3");
  }
  const int m = (party_count - 1) / 2;
  InfoQuantity q(default_labels(party_count), "Q" + std::to_string(party_count));
  const auto block = [&](int start, int length) {
    PartySet s;
    for (int j = 0; j < length; ++j) s = s.with((start + j) % party_count);
    return s;
  };
  for (int i = 0; i < party_count; ++i) {
    q.add_term(block(i, m + 1), 1);
    q.add_term(block(i, m), -1);
  }
  q.add_term(q.universe(), -1);
  return q;
}

std::vector<std::string> named_quantity_names() { return {"SA", "MMI", "KP", "LW", "Q61", "Q62"}; }

InfoQuantity gen_named(std::string_view name) {
  const std::vector<std::string> abc = {"A", "B", "C"};
  const std::vector<std::string> af = {"A", "B", "C", "D", "E", "F"};
  if (name == "SA") return from_terms("SA", {"A", "B"}, {{1, "A"}, {1, "B"}, {-1, "AB"}});
  if (name == "MMI" || name == "KP") {
    return from_terms(name == "MMI" ? "MMI" : "KP", abc,
                      {{1, "AB"}, {1, "AC"}, {1, "BC"}, {-1, "A"}, {-1, "B"}, {-1, "C"}, {-1, "ABC"}});
  }
  if (name == "LW") return from_terms("LW", abc, {{1, "AB"}, {1, "BC"}, {-1, "B"}, {-1, "ABC"}});
  if (name == "Q61") {
    return from_terms("Q61", af,
                      {{1, "AEF"},   {1, "BEF"},   {1, "ADE"},   {1, "ADF"},  {1, "BDE"},
                       {1, "BDF"},   {1, "ABCD"},  {1, "ABCE"},  {1, "ABCF"}, {1, "C"},
                       {-1, "ABCEF"}, {-1, "ABCDF"}, {-1, "ABCDE"}, {-1, "AD"}, {-1, "AE"},
                       {-1, "AF"},   {-1, "BD"},   {-1, "BE"},   {-1, "BF"},  {-1, "CDEF"}});
  }
  if (name == "Q62") {
    return from_terms("Q62", af,
                      {{1, "ADE"},  {1, "ADF"},  {1, "AEF"},  {1, "BDE"},  {1, "BDF"},   {1, "BEF"},
                       {1, "CDE"},  {1, "CDF"},  {1, "CEF"},  {1, "ABC"},  {-1, "AD"},   {-1, "AE"},
                       {-1, "AF"},  {-1, "BD"},  {-1, "BE"},  {-1, "BF"},  {-1, "CD"},   {-1, "CE"},
                       {-1, "CF"},  {-2, "DEF"}, {-1, "ABCDEF"}});
  }
  throw InputError("unknown named quantity \"" + std::string(name) + "\" (known: SA, MMI, KP, LW, Q61, Q62)");
}

InfoQuantity quantity_from_reference(std::string_view ref) {
  for (const auto& n : named_quantity_names()) {
    if (ref == n) return gen_named(ref);
  }
  const auto suffix_int = [&](std::string_view prefix) -> std::optional<int> {
    if (ref.size() <= prefix.size() || ref.substr(0, prefix.size()) != prefix) return std::nullopt;
    return parse_int(ref.substr(prefix.size()));
  };
  if (auto n = suffix_int("In")) return gen_multi_information(*n);
  if (auto n = suffix_int("I")) return gen_multi_information(*n);
  if (auto n = suffix_int("cyclic")) return gen_cyclic(*n);
  if (auto n = suffix_int("Q")) return gen_cyclic(*n);
  auto q = parse(ref);
  return q;
}

}  // namespace teeprobe
