#include "teeprobe/tripartite.hpp"

#include <algorithm>

#include "teeprobe/errors.hpp"

namespace teeprobe {

namespace {

// Adds sign * I_3(X:Y:Z) to q.
void add_i3(InfoQuantity& q, PartySet x, PartySet y, PartySet z, const Rational& sign) {
  q.add_term(x, sign);
  q.add_term(y, sign);
  q.add_term(z, sign);
  q.add_term(x | y, -sign);
  q.add_term(x | z, -sign);
  q.add_term(y | z, -sign);
  q.add_term(x | y | z, sign);
}

}  // namespace

int TripartiteForm::p() const {
  return static_cast<int>(std::count_if(terms.begin(), terms.end(), [](const auto& t) { return t.w.empty(); }));
}

int TripartiteForm::q() const { return static_cast<int>(terms.size()) - p(); }

void validate(const TripartiteForm& form) {
  const InfoQuantity universe_check(form.parties);
  const PartySet universe = universe_check.universe();
  for (std::size_t i = 0; i < form.terms.size(); ++i) {
    const auto& t = form.terms[i];
    const std::string where = "tripartite term " + std::to_string(i) + ": ";
    if (t.x.empty() || t.y.empty() || t.z.empty()) throw InputError(where + "X, Y and Z must be nonempty");
    const PartySet args[] = {t.x, t.y, t.z, t.w};
    PartySet seen;
    for (const auto& a : args) {
      if (seen.intersects(a)) throw InputError(where + "arguments must be pairwise disjoint");
      seen |= a;
    }
    if (!universe.contains(seen)) throw InputError(where + "argument outside the party universe");
  }
}

InfoQuantity tripartite_expand(const TripartiteForm& form) {
  validate(form);
  InfoQuantity q(form.parties);
  for (const auto& t : form.terms) {
    if (t.w.empty()) {
      add_i3(q, t.x, t.y, t.z, -1);
    } else {
      add_i3(q, t.x, t.y, t.z | t.w, -1);
      add_i3(q, t.x, t.y, t.w, 1);
    }
  }
  return q;
}

TripartiteMatch verify_tripartite_form(const InfoQuantity& quantity, const TripartiteForm& form) {
  TripartiteMatch result{false, form.p(), form.q()};
  const InfoQuantity expanded = tripartite_expand(form);
  std::vector<std::string> all = quantity.parties();
  for (const auto& p : form.parties) {
    if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  result.match = quantity.embedded(all) == expanded.embedded(all);
  return result;
}

}  // namespace teeprobe
