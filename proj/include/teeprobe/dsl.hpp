#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "teeprobe/info_quantity.hpp"

namespace teeprobe {

// Grammar (whitespace allowed between tokens):
//
//   quantity := [ "parties" "(" ident ("," ident)* ")" ":" ] expr
//   expr     := "0" | [sign] term (sign term)*
//   term     := [rational ["*"]] atom
//   atom     := "S(" region ")"
//             | "I(" region (":" region)+ [ "|" region ] ")"
//   region   := ident ("," ident)+ | packed | ident
//   packed   := ([A-Z][0-9]*)+          e.g. ABC, A1A2A10
//
// I(X1:...:Xm) expands by inclusion-exclusion; I(X1:...:Xm | W) is the
// conditional version sum_J (-1)^{|J|+1} (S(X_J W) - S(W)).

/// Parses a quantity. Without a `parties(...)` prefix the party list is the
/// natural-sorted set of parties that survive cancellation.
InfoQuantity parse(std::string_view text);

/// Parses against a fixed universe; labels outside it are an error.
InfoQuantity parse(std::string_view text, const std::vector<std::string>& universe);

/// Canonical text: terms in basis order, "0" for no terms, a `parties(...)`
/// prefix only when the party list is not the natural-sorted support.
std::string render(const InfoQuantity& q);

/// Region as written inside S(...): packed when every label is [A-Z][0-9]*.
std::string render_region(const std::vector<std::string>& labels);

}  // namespace teeprobe
