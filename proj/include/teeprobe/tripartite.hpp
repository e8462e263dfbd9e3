#pragma once

#include <string>
#include <vector>

#include "teeprobe/info_quantity.hpp"

namespace teeprobe {

/// One summand -I_3(X:Y:Z|W); W empty means the unconditional -I_3(X:Y:Z).
struct TripartiteTerm {
  PartySet x;
  PartySet y;
  PartySet z;
  PartySet w;
};

/// Q = sum_i -I_3(X_i:Y_i:Z_i|W_i) over a party universe ("I^p C^q").
struct TripartiteForm {
  std::vector<std::string> parties;
  std::vector<TripartiteTerm> terms;

  /// Number of unconditional terms.
  int p() const;
  /// Number of conditional terms.
  int q() const;
};

/// Throws InputError on empty X/Y/Z, overlapping arguments or parties
/// outside the universe.
void validate(const TripartiteForm& form);

/// Expands with I_3(X:Y:Z|W) = I_3(X:Y:ZW) - I_3(X:Y:W) and
/// I_3(X:Y:Z) = X+Y+Z-XY-XZ-YZ+XYZ.
InfoQuantity tripartite_expand(const TripartiteForm& form);

struct TripartiteMatch {
  bool match = false;
  int p = 0;
  int q = 0;
};

/// Compares the expansion with `quantity` term by term, aligning parties by
/// label.
TripartiteMatch verify_tripartite_form(const InfoQuantity& quantity, const TripartiteForm& form);

}  // namespace teeprobe
