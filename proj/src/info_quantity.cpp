#include "teeprobe/info_quantity.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "teeprobe/errors.hpp"

namespace teeprobe {

void validate_party_label(std::string_view label) {
  const auto bad = [&](const char* why) {
    throw InputError("invalid party label \"" + std::string(label) + "\": " + why);
  };
  if (label.empty()) bad("empty");
  if (label == kOuterLabel) bad("\"O\" is reserved for the outer region");
  const auto head = static_cast<unsigned char>(label.front());
  if (!std::isalpha(head) && head != '_') bad("must start with a letter or '_'");
  for (char c : label) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') bad("only letters, digits and '_' are allowed");
  }
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  const auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      const std::size_t i0 = i;
      const std::size_t j0 = j;
      while (i < a.size() && is_digit(a[i])) ++i;
      while (j < b.size() && is_digit(b[j])) ++j;
      auto da = a.substr(i0, i - i0);
      auto db = b.substr(j0, j - j0);
      const auto strip = [](std::string_view& s) {
        while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
      };
      strip(da);
      strip(db);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

std::vector<std::string> default_labels(int count) {
  std::vector<std::string> out;
  out.reserve(count);
  if (count <= 25) {
    for (char c = 'A'; static_cast<int>(out.size()) < count; ++c) {
      if (c != 'O') out.emplace_back(1, c);
    }
  } else {
    for (int i = 1; i <= count; ++i) out.push_back("A" + std::to_string(i));
  }
  return out;
}

InfoQuantity::InfoQuantity(std::vector<std::string> parties, std::string name)
    : parties_(std::move(parties)), name_(std::move(name)) {
  if (parties_.size() >= static_cast<std::size_t>(PartySet::kCapacity)) {
    throw InputError("at most " + std::to_string(PartySet::kCapacity - 1) + " parties are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& p : parties_) {
    validate_party_label(p);
    if (!seen.insert(p).second) throw InputError("duplicate party label \"" + p + "\"");
  }
}

int InfoQuantity::party_index(std::string_view label) const {
  const auto it = std::find(parties_.begin(), parties_.end(), label);
  return it == parties_.end() ? -1 : static_cast<int>(it - parties_.begin());
}

PartySet InfoQuantity::region(std::span<const std::string> labels) const {
  PartySet out;
  for (const auto& l : labels) {
    if (l == kOuterLabel) throw InputError("\"O\" is the outer region and cannot be part of a region");
    const int i = party_index(l);
    if (i < 0) throw InputError("unknown party \"" + l + "\"");
    out = out.with(i);
  }
  return out;
}

std::vector<std::string> InfoQuantity::labels(PartySet region) const {
  std::vector<std::string> out;
  region.for_each([&](int i) { out.push_back(parties_.at(i)); });
  return out;
}

PartySet InfoQuantity::support() const {
  PartySet s;
  for (const auto& [t, c] : terms_) s |= t;
  return s;
}

Rational InfoQuantity::coefficient(PartySet region) const {
  const auto it = terms_.find(region);
  return it == terms_.end() ? Rational(0) : it->second;
}

void InfoQuantity::check_region(PartySet region) const {
  if (region.empty()) throw InputError("term region must be nonempty");
  if (!universe().contains(region)) throw InputError("term region outside the declared parties");
}

void InfoQuantity::add_term(PartySet region, const Rational& coeff) {
  check_region(region);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(region, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void InfoQuantity::append_term(PartySet region, Rational coeff) {
  check_region(region);
  if (coeff == 0) return;
  terms_.emplace_hint(terms_.end(), region, std::move(coeff));
}

InfoQuantity InfoQuantity::embedded(const std::vector<std::string>& universe) const {
  InfoQuantity out(universe, name_);
  std::vector<int> target(parties_.size());
  for (std::size_t i = 0; i < parties_.size(); ++i) {
    target[i] = out.party_index(parties_[i]);
  }
  for (const auto& [t, c] : terms_) {
    PartySet mapped;
    t.for_each([&](int i) {
      if (target[i] < 0) throw InputError("party \"" + parties_[i] + "\" missing from target universe");
      mapped = mapped.with(target[i]);
    });
    out.add_term(mapped, c);
  }
  return out;
}

void InfoQuantity::check_same_parties(const InfoQuantity& other) const {
  if (parties_ != other.parties_) {
    throw InputError("quantities are defined over different party lists");
  }
}

InfoQuantity& InfoQuantity::operator+=(const InfoQuantity& other) {
  check_same_parties(other);
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

InfoQuantity& InfoQuantity::operator-=(const InfoQuantity& other) {
  check_same_parties(other);
  for (const auto& [t, c] : other.terms_) add_term(t, -c);
  return *this;
}

InfoQuantity& InfoQuantity::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= factor;
  return *this;
}

}  // namespace teeprobe
