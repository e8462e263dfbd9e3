// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "teeprobe/anyon.hpp"
#include "teeprobe/arrangement.hpp"
#include "teeprobe/catalog.hpp"
#include "teeprobe/dsl.hpp"
#include "teeprobe/entropy_algebra.hpp"
#include "teeprobe/generators.hpp"
#include "teeprobe/tqft_eval.hpp"
#include "teeprobe/tripartite.hpp"
#include "test_support.hpp"

using namespace teeprobe;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

SymEntropy S(int k) { return sphere_entropy_symbolic(k); }

SymEntropy log_d(long c) { return {Rational(c), Rational(0)}; }

int punct(const Arrangement& a, const std::vector<std::string>& labels) { return puncture_count(a, a.region(labels)); }

SymEntropy weighted(const std::map<int, Rational>& m) {
  SymEntropy out;
  for (const auto& [k, w] : m) out += S(k) * w;
  return out;
}

const TallyTerm& term_for(const Tally& t, std::set<std::string> region) {
  for (const auto& term : t.terms) {
    if (std::set<std::string>(term.region.begin(), term.region.end()) == region) return term;
  }
  throw Failure{"no tally term for a region"};
}

void c1() {
  const auto v = eval_tqft(gen_multi_information(3), make_kp_disk3(), {EvalMode::paper, false});
  require(v.c_logD == -1 && v.c_K == 0, "I3 on kp_disk3 = " + to_string(v));
}

void c2() {
  const auto a = make_resolved_pie(5);
  const std::vector<int> singles{3, 4, 4, 3, 5};
  const auto labels = a.labels(a.internal_faces());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    require(punct(a, {labels[i]}) == singles[i], "single punctures of " + labels[i]);
  }
  const std::map<std::string, int> pairs{{"AB", 5}, {"AC", 7}, {"AD", 6}, {"AE", 6}, {"BC", 6},
                                         {"BD", 7}, {"BE", 7}, {"CD", 5}, {"CE", 7}, {"DE", 6}};
  for (const auto& [p, k] : pairs) {
    require(punct(a, {p.substr(0, 1), p.substr(1, 1)}) == k, "pair punctures of " + p);
  }
  require(eval_tqft(gen_multi_information(4), make_resolved_pie(4)) == log_d(-1), "I4 on pie4");
  require(eval_tqft(gen_multi_information(5), a) == log_d(-1), "I5 on pie5");
}

void c3() {
  Tally t;
  const auto v = eval_tqft(gen_cyclic(5), make_resolved_pie(5), {}, &t);
  require(to_string(t) == "(1/2)[3 S_7 + 2 S_6 - 3 S_6 - 3 S_5]", "tally " + to_string(t));
  require(v == log_d(1), "Q5 on pie5 = " + to_string(v));
}

void check_partial(int parties, const std::vector<std::string>& chosen, const std::vector<int>& expected) {
  const auto a = make_resolved_pie(parties);
  const auto q = gen_partial_multi_information(chosen, a.labels(a.internal_faces()));
  Tally t;
  const auto v = eval_tqft(q, a, {}, &t);
  const auto& x = chosen[0];
  const auto& y = chosen[1];
  const auto& z = chosen[2];
  const std::vector<std::set<std::string>> order{{x}, {y}, {z}, {x, y}, {x, z}, {y, z}, {x, y, z}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& term = term_for(t, order[i]);
    require(term.spheres == std::vector<int>{expected[i]},
            "tally slot " + std::to_string(i) + " on pie" + std::to_string(parties));
  }
  require(v == log_d(-1), "I3 partial on pie" + std::to_string(parties) + " = " + to_string(v));
}

void c4() {
  check_partial(5, {"A", "C", "E"}, {3, 4, 5, 7, 6, 7, 8});
  for (int n = 3; n <= 6; ++n) {
    const auto labels = default_labels(2 * n + 1);
    check_partial(2 * n + 1, {labels.back(), labels[1], labels[3]},
                  {2 * n + 1, 4, 4, 2 * n + 3, 2 * n + 3, 8, 2 * n + 5});
  }
}

void c5() {
  for (int n = 1; n <= 5; ++n) {
    const int parties = 2 * n + 1;
    const auto a = make_resolved_pie(parties);
    const auto q = gen_cyclic(parties);
    Tally t;
    const auto v = eval_tqft(q, a, {}, &t);
    const auto full = a.labels(a.internal_faces());
    const auto& whole = term_for(t, {full.begin(), full.end()});
    require(whole.coeff == -1 && whole.spheres == std::vector<int>{parties}, "S_A term for n=" + std::to_string(n));
    SymEntropy minus = weighted(t.negative) - S(parties);
    const Rational m(n - 2);
    const auto plus_expected = S(2 * n + 2) * 2 + S(2 * n + 3) * Rational(n + 1) + S(2 * n + 4) * m;
    const auto minus_expected = S(2 * n + 1) * 2 + S(2 * n + 2) * Rational(n + 1) + S(2 * n + 3) * m;
    require(weighted(t.positive) == plus_expected, "positive sum for n=" + std::to_string(n));
    require(minus == minus_expected, "negative sum for n=" + std::to_string(n));
    require(v == log_d(1), "cyclic value for n=" + std::to_string(n));
  }
}

void c6() {
  const auto lw = eval_tqft(gen_named("LW"), make_kp_disk3());
  require(lw == SymEntropy{2, -1}, "LW on kp_disk3 = " + to_string(lw));
  const auto q61 = gen_named("Q61");
  require(classify(q61) == Classification::fixed_geometry, "Q61 classification");
  require(!k_balance(q61, 2).balanced, "Q61 is 2-balanced");
  const auto v61 = eval_tqft(q61, make_resolved_pie(6));
  require(v61.c_K != 0, "Q61 on pie6 is topological: " + to_string(v61));
  const auto q62 = gen_named("Q62");
  require(sum_coeffs(q62) == -2, "Q62 coefficient sum");
  require(eval_tqft(q62, make_resolved_pie(6)) == log_d(2), "Q62 on pie6");
}

void c7() {
  for (int n = 3; n <= 20; ++n) {
    const auto v = eval_tqft(gen_multi_information(n), make_resolved_pie(n));
    require(v == log_d(-1), "I" + std::to_string(n) + " = " + to_string(v));
  }
}

void c8() {
  std::mt19937_64 rng(8);
  int pairs = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto m = trial % 2 ? testsupport::strips_map(n)
                             : testsupport::pie_map(testsupport::letters(n), testsupport::random_triangulation(n, rng));
    const auto a = m.build("random");
    const auto form = testsupport::random_tripartite_form(n, rng);
    const auto q = tripartite_expand(form);
    const auto v = eval_tqft(q, a);
    require(v == SymEntropy{-sum_coeffs(q), 0}, "master identity failed for " + render(q) + " on " +
                                                    (trial % 2 ? "strips" : "pie") + std::to_string(n));
    TripartiteForm conditional{form.parties, {}};
    for (const auto& term : form.terms) {
      if (!term.w.empty()) conditional.terms.push_back(term);
    }
    if (!conditional.terms.empty()) {
      require(eval_tqft(tripartite_expand(conditional), a) == SymEntropy{}, "conditional terms do not vanish");
    }
    ++pairs;
  }
  require(pairs >= 500, "too few pairs");
}

void c9() {
  for (int n : {5, 7}) {
    const auto a = make_resolved_pie(n);
    const auto v = eval_area_law(gen_cyclic(n), a);
    require(v.lengths_vanish() && v.c_gamma == 1, "area law for Q" + std::to_string(n) + ": " + to_string(v, a));
  }
}

void c10() {
  for (const char* name : {"trivial", "toric", "fibonacci", "ising", "Z_2", "Z_3", "Z_4(1)", "Z_5"}) {
    const auto m = builtin_model(name);
    const auto s = derived_scalars(m);
    for (int k = 2; k <= 8; ++k) {
      const auto r = brute_force_entropy(m, k);
      require(std::abs(r.entropy - closed_form_entropy(m, k)) < 1e-9,
              std::string(name) + " k=" + std::to_string(k) + " entropy mismatch");
      for (const auto& row : r.marginals) {
        for (int a = 0; a < m.rank(); ++a) {
          require(std::abs(row[a] - s.P[a]) < 1e-9, std::string(name) + " marginal mismatch");
        }
      }
    }
  }
  require(std::abs(brute_force_value(builtin_model("toric"), 4) - 6 * std::log(2.0)) < 1e-9, "toric S_4");
}

void c11() {
  require(ghz_value(gen_named("MMI")) == -1, "GHZ value of MMI");
  for (const auto& e : starter_catalog()) {
    require(ghz_value(e.quantity) == sum_coeffs(e.quantity), "GHZ value of " + e.quantity.name());
  }
}

std::string run(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  require(pipe != nullptr, "cannot run " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

void c12() {
  for (const auto& e : starter_catalog()) {
    require(parse(render(e.quantity)) == e.quantity, "round trip of " + e.quantity.name());
  }
  const std::string cmd = std::string("\"") + TEEPROBE_CLI + "\" --format json scan --geometries kp_disk3,pie5,pie7,strips3"
                          " --modes paper,additive,area-law --models fibonacci,toric,ising 2>/dev/null";
  const auto first = run(cmd);
  const auto second = run(cmd);
  require(first.size() > 100, "scan produced no output");
  require(first == second, "scan output differs between runs");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_ms;
    std::function<void()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "I3 on kp_disk3 is -logD", 1, c1},
      {2, "resolved_pie(5) puncture tallies; I4, I5 = -logD", 10, c2},
      {3, "Q5 tally and value logD", 1000, c3},
      {4, "partial multi-information tallies", 1000, c4},
      {5, "cyclic family sums for n = 1..5", 1000, c5},
      {6, "LW, Q61, Q62 exhibits", 1000, c6},
      {7, "I_n on resolved_pie(n) for n = 3..20", 60000, c7},
      {8, "superbalanced quantities are -sum_coeffs logD", 30000, c8},
      {9, "area-law lengths vanish, gamma multiple 1", 1000, c9},
      {10, "anyon brute force matches closed form", 10000, c10},
      {11, "GHZ values", 1000, c11},
      {12, "render/parse identity and deterministic scan", 60000, c12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.check();
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && ms > c.budget_ms) {
      std::ostringstream os;
      os << "took " << ms << " ms, budget " << c.budget_ms << " ms";
      error = os.str();
    }
    std::printf("%s %2d  %-52s %10.3f ms%s%s\n", error.empty() ? "PASS" : "FAIL", c.id, c.title, ms,
                error.empty() ? "" : "  ", error.c_str());
    if (!error.empty()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
