#include "teeprobe/rational.hpp"

#include <cctype>

#include "teeprobe/errors.hpp"

namespace teeprobe {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool is_rational_literal(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return all_digits(text);
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return false;
  return den.find_first_not_of('0') != std::string_view::npos;
}

Rational parse_rational(std::string_view text) {
  if (!is_rational_literal(text)) {
    throw InputError("malformed rational \"" + std::string(text) +
                     "\" (expected an integer or p/q, e.g. \"-3/2\")");
  }
  Rational r(std::string(text), 10);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace teeprobe
