#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teeprobe/index_set.hpp"
#include "teeprobe/rational.hpp"

namespace teeprobe {

struct PartyTag;
using PartySet = IndexSet<PartyTag>;

/// Label of the outer (purifying) region. Never a party.
inline constexpr std::string_view kOuterLabel = "O";

/// Throws InputError unless `label` is an identifier other than "O".
void validate_party_label(std::string_view label);

/// Orders labels so that embedded integers compare numerically (A2 < A10).
bool natural_less(std::string_view a, std::string_view b);

/// A..Z without O for n <= 25, otherwise A1..An.
std::vector<std::string> default_labels(int count);

/// A rational linear combination of subsystem entropies, sum_T a_T S(T),
/// over the nonempty subsets T of a declared, ordered party universe.
class InfoQuantity {
 public:
  using Terms = std::map<PartySet, Rational, CanonicalOrder<PartyTag>>;

  InfoQuantity() = default;
  explicit InfoQuantity(std::vector<std::string> parties, std::string name = {});

  const std::vector<std::string>& parties() const noexcept { return parties_; }
  int party_count() const noexcept { return static_cast<int>(parties_.size()); }
  PartySet universe() const noexcept { return PartySet::first(party_count()); }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Index of `label` in the party list, or -1.
  int party_index(std::string_view label) const;
  /// Throws InputError on unknown or reserved labels.
  PartySet region(std::span<const std::string> labels) const;
  /// Party labels of `region` in party order.
  std::vector<std::string> labels(PartySet region) const;
  /// The union of all term keys.
  PartySet support() const;

  Rational coefficient(PartySet region) const;
  /// Adds `coeff` to the coefficient of `region`; zero results are erased.
  void add_term(PartySet region, const Rational& coeff);
  /// Appends a term known to sort after every stored key (generators).
  void append_term(PartySet region, Rational coeff);

  /// Same quantity over a larger (or reordered) universe, matched by label.
  InfoQuantity embedded(const std::vector<std::string>& universe) const;

  InfoQuantity& operator+=(const InfoQuantity& other);
  InfoQuantity& operator-=(const InfoQuantity& other);
  InfoQuantity& operator*=(const Rational& factor);

  friend InfoQuantity operator+(InfoQuantity a, const InfoQuantity& b) { return a += b; }
  friend InfoQuantity operator-(InfoQuantity a, const InfoQuantity& b) { return a -= b; }
  friend InfoQuantity operator*(InfoQuantity a, const Rational& f) { return a *= f; }
  friend InfoQuantity operator*(const Rational& f, InfoQuantity a) { return a *= f; }
  InfoQuantity operator-() const { return *this * Rational(-1); }

  /// Equal parties (in order) and equal terms; the name is metadata.
  friend bool operator==(const InfoQuantity& a, const InfoQuantity& b) {
    return a.parties_ == b.parties_ && a.terms_ == b.terms_;
  }

 private:
  void check_region(PartySet region) const;
  void check_same_parties(const InfoQuantity& other) const;

  std::vector<std::string> parties_;
  Terms terms_;
  std::string name_;
};

}  // namespace teeprobe
