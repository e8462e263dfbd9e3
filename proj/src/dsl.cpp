#include "teeprobe/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "teeprobe/errors.hpp"

namespace teeprobe {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_packable(std::string_view label) {
  if (label.empty() || !is_upper(label.front())) return false;
  return std::all_of(label.begin() + 1, label.end(), is_digit);
}

// A parsed term before the party universe is known.
struct RawTerm {
  std::vector<std::string> region;
  Rational coeff;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::optional<std::vector<std::string>> declaration() {
    skip_ws();
    if (text_.substr(pos_, 7) != "parties") return std::nullopt;
    std::size_t save = pos_;
    pos_ += 7;
    skip_ws();
    if (!peek('(')) {
      pos_ = save;
      return std::nullopt;
    }
    ++pos_;
    std::vector<std::string> labels;
    while (true) {
      skip_ws();
      labels.push_back(identifier());
      skip_ws();
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    skip_ws();
    expect(':');
    return labels;
  }

  std::vector<RawTerm> expression() {
    std::vector<RawTerm> terms;
    skip_ws();
    {
      // A lone "0" is the empty quantity.
      std::size_t p = pos_;
      if (p < text_.size() && text_[p] == '0') {
        ++p;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        if (p == text_.size()) {
          pos_ = p;
          return terms;
        }
      }
    }
    int sign = 1;
    if (peek('+') || peek('-')) {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    term(sign, terms);
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (!peek('+') && !peek('-')) fail("expected '+' or '-'");
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
      term(sign, terms);
    }
    return terms;
  }

  std::size_t position() const { return pos_; }

 private:
  void term(int sign, std::vector<RawTerm>& out) {
    skip_ws();
    Rational coeff = sign;
    if (!at_end() && is_digit(text_[pos_])) {
      const std::size_t start = pos_;
      while (!at_end() && is_digit(text_[pos_])) ++pos_;
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den = pos_;
        while (!at_end() && is_digit(text_[pos_])) ++pos_;
        if (den == pos_) fail("expected denominator after '/'");
      }
      if (!at_end() && text_[pos_] == '.') fail("decimal coefficients are not allowed; write a fraction like 3/2");
      const auto literal = text_.substr(start, pos_ - start);
      if (!is_rational_literal(literal)) {
        pos_ = start;
        fail("zero denominator");
      }
      coeff *= parse_rational(literal);
      skip_ws();
      if (peek('*')) {
        ++pos_;
        skip_ws();
      }
    }
    atom(coeff, out);
  }

  void atom(const Rational& coeff, std::vector<RawTerm>& out) {
    if (peek('S')) {
      ++pos_;
      skip_ws();
      expect('(');
      auto r = region();
      expect(')');
      out.push_back({std::move(r), coeff});
      return;
    }
    if (peek('I')) {
      ++pos_;
      skip_ws();
      expect('(');
      std::vector<std::vector<std::string>> parts;
      parts.push_back(region());
      std::optional<std::vector<std::string>> cond;
      while (true) {
        if (peek(':')) {
          ++pos_;
          parts.push_back(region());
          continue;
        }
        if (peek('|')) {
          ++pos_;
          cond = region();
        }
        break;
      }
      if (parts.size() < 2) fail("I(...) needs at least two arguments separated by ':'");
      expect(')');
      expand_information(parts, cond, coeff, out);
      return;
    }
    fail("expected S(...) or I(...)");
  }

  static void expand_information(const std::vector<std::vector<std::string>>& parts,
                                 const std::optional<std::vector<std::string>>& cond,
                                 const Rational& coeff, std::vector<RawTerm>& out) {
    const std::size_t m = parts.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      std::vector<std::string> u;
      for (std::size_t j = 0; j < m; ++j) {
        if (mask & (std::size_t{1} << j)) u.insert(u.end(), parts[j].begin(), parts[j].end());
      }
      const Rational sign = std::popcount(mask) % 2 == 1 ? 1 : -1;
      if (cond) {
        u.insert(u.end(), cond->begin(), cond->end());
        out.push_back({std::move(u), sign * coeff});
        out.push_back({*cond, -sign * coeff});
      } else {
        out.push_back({std::move(u), sign * coeff});
      }
    }
  }

  std::vector<std::string> region() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && text_[pos_] != ':' && text_[pos_] != '|' && text_[pos_] != ')') ++pos_;
    std::string_view body = text_.substr(start, pos_ - start);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.empty()) {
      pos_ = start;
      fail("empty region");
    }
    std::vector<std::string> labels;
    if (body.find(',') != std::string_view::npos) {
      std::size_t offset = 0;
      while (offset <= body.size()) {
        const std::size_t comma = std::min(body.find(',', offset), body.size());
        std::string_view item = body.substr(offset, comma - offset);
        std::size_t lead = 0;
        while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead]))) ++lead;
        item.remove_prefix(lead);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        check_label(item, start + offset + lead);
        labels.emplace_back(item);
        offset = comma + 1;
      }
    } else {
      bool packed = is_upper(body.front());
      for (char c : body) packed = packed && (is_upper(c) || is_digit(c));
      if (packed) {
        std::size_t i = 0;
        while (i < body.size()) {
          std::size_t j = i + 1;
          while (j < body.size() && is_digit(body[j])) ++j;
          check_label(body.substr(i, j - i), start + i);
          labels.emplace_back(body.substr(i, j - i));
          i = j;
        }
      } else {
        check_label(body, start);
        labels.emplace_back(body);
      }
    }
    return labels;
  }

  void check_label(std::string_view label, std::size_t at) {
    try {
      validate_party_label(label);
    } catch (const InputError& e) {
      throw ParseError(at, e.what());
    }
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
    const auto label = text_.substr(start, pos_ - start);
    if (label.empty()) fail("expected a party label");
    check_label(label, start);
    return std::string(label);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) {
    skip_ws();
    return !at_end() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

InfoQuantity assemble(const std::vector<std::string>& universe, const std::vector<RawTerm>& raw) {
  InfoQuantity q(universe);
  for (const auto& t : raw) q.add_term(q.region(t.region), t.coeff);
  return q;
}

InfoQuantity parse_impl(std::string_view text, const std::vector<std::string>* fixed_universe) {
  Parser parser(text);
  auto declared = parser.declaration();
  const auto raw = parser.expression();

  if (declared || fixed_universe) {
    const auto& universe = declared ? *declared : *fixed_universe;
    if (declared && fixed_universe) {
      for (const auto& l : *declared) {
        if (std::find(fixed_universe->begin(), fixed_universe->end(), l) == fixed_universe->end()) {
          throw InputError("unknown party \"" + l + "\"");
        }
      }
    }
    try {
      return assemble(universe, raw);
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(parser.position(), e.what());
    }
  }

  std::set<std::string, decltype(&natural_less)> seen(&natural_less);
  for (const auto& t : raw) seen.insert(t.region.begin(), t.region.end());
  const std::vector<std::string> all(seen.begin(), seen.end());
  const InfoQuantity full = assemble(all, raw);
  // Parties that cancelled out entirely are dropped.
  const PartySet support = full.support();
  std::vector<std::string> kept;
  for (int i = 0; i < full.party_count(); ++i) {
    if (support.contains(i)) kept.push_back(all[i]);
  }
  return kept.size() == all.size() ? full : full.embedded(kept);
}

}  // namespace

InfoQuantity parse(std::string_view text) { return parse_impl(text, nullptr); }

InfoQuantity parse(std::string_view text, const std::vector<std::string>& universe) {
  return parse_impl(text, &universe);
}

std::string render_region(const std::vector<std::string>& labels) {
  std::string out;
  const bool packed = std::all_of(labels.begin(), labels.end(), is_packable);
  for (const auto& l : labels) {
    if (!packed && !out.empty()) out += ',';
    out += l;
  }
  return out;
}

std::string render(const InfoQuantity& q) {
  std::string out;
  const PartySet support = q.support();
  std::vector<std::string> natural;
  for (int i = 0; i < q.party_count(); ++i) {
    if (support.contains(i)) natural.push_back(q.parties()[i]);
  }
  std::sort(natural.begin(), natural.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  if (natural != q.parties()) {
    out += "parties(";
    for (int i = 0; i < q.party_count(); ++i) out += (i ? "," : "") + q.parties()[i];
    out += "): ";
  }
  if (q.empty()) return out + "0";

  bool first = true;
  for (const auto& [t, c] : q.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "- ";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    if (magnitude != 1) out += to_string(magnitude) + " ";
    out += "S(" + render_region(q.labels(t)) + ")";
  }
  return out;
}

}  // namespace teeprobe
