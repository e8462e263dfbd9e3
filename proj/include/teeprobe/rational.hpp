#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace teeprobe {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// True for "p" or "p/q" with an optional leading '-', q nonzero.
bool is_rational_literal(std::string_view text);

/// Parses a rational literal; throws InputError for anything else
/// (in particular decimals such as "1.5").
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace teeprobe
