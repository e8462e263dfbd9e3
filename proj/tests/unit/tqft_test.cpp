#include <gtest/gtest.h>

#include <random>

#include "teeprobe/dsl.hpp"
#include "teeprobe/entropy_algebra.hpp"
#include "teeprobe/errors.hpp"
#include "teeprobe/generators.hpp"
#include "teeprobe/tqft_eval.hpp"
#include "teeprobe/tripartite.hpp"
#include "test_support.hpp"

using namespace teeprobe;
using testsupport::sphere;

namespace {

SymEntropy logD(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return {r, 0};
}

const EvalOptions kPaper{EvalMode::paper, false};
const EvalOptions kAdditive{EvalMode::additive, false};

}  // namespace

TEST(Tqft, SphereEntropy) {
  EXPECT_EQ(sphere_entropy_symbolic(0), SymEntropy{});
  EXPECT_EQ(sphere_entropy_symbolic(1), SymEntropy{});
  for (int k = 2; k < 40; ++k) EXPECT_EQ(sphere_entropy_symbolic(k), sphere(k)) << k;
  EXPECT_THROW(sphere_entropy_symbolic(-1), InputError);
  EXPECT_EQ(to_string(sphere_entropy_symbolic(2)), "2 logD - 2 K");
  EXPECT_EQ(to_string(SymEntropy{}), "0");
}

TEST(Tqft, KnownValues) {
  EXPECT_EQ(eval_tqft(gen_multi_information(3), make_kp_disk3()), logD(-1));
  EXPECT_EQ(eval_tqft(gen_named("MMI"), make_kp_disk3()), logD(1));
  EXPECT_EQ(eval_tqft(gen_named("LW"), make_kp_disk3()), (SymEntropy{2, -1}));
  EXPECT_EQ(eval_tqft(gen_cyclic(5), make_resolved_pie(5)), logD(1));
  EXPECT_EQ(eval_tqft(gen_named("Q62"), make_resolved_pie(6)), logD(2));
  const auto q61 = eval_tqft(gen_named("Q61"), make_resolved_pie(6));
  EXPECT_NE(q61.c_K, 0);
  EXPECT_EQ(classify(gen_named("Q61")), Classification::fixed_geometry);
  for (int n = 3; n <= 20; ++n) {
    EXPECT_EQ(eval_tqft(gen_multi_information(n), make_resolved_pie(n)), logD(-1)) << n;
  }
}

TEST(Tqft, ModesDifferOnStrips) {
  const auto s = make_strips(3);
  const auto i3 = gen_multi_information(3);
  EXPECT_EQ(eval_tqft(i3, s, kPaper), logD(-1));
  EXPECT_EQ(eval_tqft(i3, s, kAdditive), SymEntropy{});
  EXPECT_NO_THROW(eval_tqft(i3, s, {EvalMode::paper, true}));
}

TEST(Tqft, StrictModeRejectsAnnuli) {
  // Ring split into A and B around a central disk C.
  ArrangementBuilder b({"A", "B", "C"});
  const int A = 0, B = 1, C = 2, O = b.outer();
  const int top_in = b.add_vertex({C, B, A});
  const int bottom_in = b.add_vertex({C, A, B});
  const int top_out = b.add_vertex({O, A, B});
  const int bottom_out = b.add_vertex({O, B, A});
  b.add_edge(top_in, top_out, A, B);
  b.add_edge(bottom_in, bottom_out, A, B);
  b.add_edge(top_in, bottom_in, C, A);
  b.add_edge(top_in, bottom_in, C, B);
  b.add_edge(top_out, bottom_out, A, O);
  b.add_edge(top_out, bottom_out, B, O);
  const auto a = b.build("annulus");
  ASSERT_TRUE(a.valid()) << a.validation().violations.front();
  const std::vector<std::string> ring{"A", "B"};
  EXPECT_EQ(boundary_b0(a, a.region(ring)), 2);
  const auto i3 = gen_multi_information(3);
  EXPECT_THROW(eval_tqft(i3, a, {EvalMode::paper, true}), UnsupportedGeometry);
  EXPECT_NO_THROW(eval_tqft(i3, a, kPaper));
  EXPECT_NO_THROW(eval_tqft(parse("S(A) + S(C)"), a, {EvalMode::paper, true}));
}

TEST(Tqft, UnknownPartyIsRejected) {
  EXPECT_THROW(eval_tqft(parse("S(A) - S(Z)"), make_kp_disk3()), InputError);
  auto j = to_json(make_kp_disk3());
  j["edges"][0]["v2"] = j["edges"][0]["v1"];
  EXPECT_THROW(eval_tqft(gen_named("MMI"), arrangement_from_json(j)), InputError);
}

TEST(Tqft, FiveCycleTally) {
  Tally t;
  eval_tqft(gen_cyclic(5), make_resolved_pie(5), kPaper, &t);
  EXPECT_EQ(to_string(t), "(1/2)[3 S_7 + 2 S_6 - 3 S_6 - 3 S_5]");
  EXPECT_EQ(t.terms.size(), 11U);
}

TEST(Tqft, TallyAggregatesToValue) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto q = testsupport::random_quantity(n, 1 + static_cast<int>(rng() % 10), rng);
    const auto a = testsupport::pie_map(testsupport::letters(n), testsupport::random_triangulation(n, rng)).build();
    for (const auto& opt : {kPaper, kAdditive}) {
      Tally t;
      const auto v = eval_tqft(q, a, opt, &t);
      SymEntropy from_tally;
      for (const auto& [k, w] : t.net()) from_tally += sphere(k) * w;
      EXPECT_EQ(from_tally * Rational(1, 2), v);
      SymEntropy from_terms;
      for (const auto& term : t.terms) {
        for (int k : term.spheres) from_terms += sphere(k) * term.coeff;
      }
      EXPECT_EQ(from_terms * Rational(1, 2), v);
    }
  }
}

// Superbalanced quantities on random geometries: paper value is
// -sum_coeffs logD, conditional pieces vanish, and the library agrees with the
// oracles in both modes.
TEST(Tqft, MasterPropertyOnRandomGeometries) {
  std::mt19937_64 rng(424242);
  int pairs = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    testsupport::TripleMap m;
    switch (trial % 3) {
      case 0: m = testsupport::pie_map(testsupport::letters(n), testsupport::random_triangulation(n, rng)); break;
      case 1: m = testsupport::strips_map(n); break;
      default: m = testsupport::random_flipped_pie(n, 8, rng); break;
    }
    const auto a = m.build("random");
    const auto form = testsupport::random_tripartite_form(n, rng);
    const auto q = tripartite_expand(form);
    const auto v = eval_tqft(q, a, kPaper);
    EXPECT_EQ(v, logD(-1) * sum_coeffs(q)) << render(q);
    EXPECT_EQ(v.c_K, 0);
    EXPECT_EQ(v, testsupport::oracle_paper(q, m));
    EXPECT_EQ(eval_tqft(q, a, kAdditive), testsupport::oracle_additive(q, m));
    EXPECT_EQ(sum_coeffs(q), -form.p());

    TripartiteForm conditional{form.parties, {}};
    for (const auto& t : form.terms) {
      if (!t.w.empty()) conditional.terms.push_back(t);
    }
    if (!conditional.terms.empty()) {
      EXPECT_EQ(eval_tqft(tripartite_expand(conditional), a, kPaper), SymEntropy{});
    }
    ++pairs;
  }
  EXPECT_GE(pairs, 500);
}

TEST(Tqft, PaperModeMatchesOracleForArbitraryQuantities) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto m = trial % 2 ? testsupport::strips_map(n) : testsupport::random_flipped_pie(n, 6, rng);
    const auto q = testsupport::random_quantity(n, 1 + static_cast<int>(rng() % 12), rng);
    const auto a = m.build();
    EXPECT_EQ(eval_tqft(q, a, kPaper), testsupport::oracle_paper(q, m));
    EXPECT_EQ(eval_tqft(q, a, kAdditive), testsupport::oracle_additive(q, m));
  }
}

TEST(Tqft, Linearity) {
  std::mt19937_64 rng(8);
  const auto a = make_resolved_pie(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto q1 = testsupport::random_quantity(6, 5, rng);
    const auto q2 = testsupport::random_quantity(6, 5, rng);
    Rational c(static_cast<long>(rng() % 11) - 5, 3);
    c.canonicalize();
    EXPECT_EQ(eval_tqft(q1 + q2, a), eval_tqft(q1, a) + eval_tqft(q2, a));
    EXPECT_EQ(eval_tqft(q1 * c, a), eval_tqft(q1, a) * c);
  }
}

TEST(Tqft, RelabelEquivariance) {
  std::mt19937_64 rng(31);
  const auto a = make_resolved_pie(5);
  const auto labels = testsupport::letters(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto perm = labels;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<std::string, std::string> mapping;
    for (std::size_t i = 0; i < labels.size(); ++i) mapping[labels[i]] = perm[i];
    const auto q = testsupport::random_quantity(5, 8, rng);
    EXPECT_EQ(eval_tqft(relabel(q, mapping), a.relabeled(mapping)), eval_tqft(q, a));
  }
}

TEST(AreaLaw, CyclicQuantitiesOnPies) {
  for (int n : {5, 7}) {
    const auto a = make_resolved_pie(n);
    const auto v = eval_area_law(gen_cyclic(n), a);
    EXPECT_TRUE(v.lengths_vanish()) << to_string(v, a);
    EXPECT_EQ(v.c_gamma, 1);
  }
  const auto s = eval_area_law(gen_multi_information(3), make_strips(3));
  EXPECT_TRUE(s.lengths_vanish());
  EXPECT_EQ(s.c_gamma, 0);
  const auto sa = eval_area_law(gen_named("SA"), make_kp_disk3());
  EXPECT_FALSE(sa.lengths_vanish());
  EXPECT_EQ(sa.length_coeffs.size(), 1U);
  EXPECT_EQ(sa.length_coeffs.begin()->second, 2);
}

TEST(AreaLaw, MatchesComponentCountOnPies) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto m = testsupport::pie_map(testsupport::letters(n), testsupport::random_triangulation(n, rng));
    const auto a = m.build();
    const auto q = tripartite_expand(testsupport::random_tripartite_form(n, rng));
    const auto v = eval_area_law(q, a);
    EXPECT_TRUE(v.lengths_vanish());
    // Every union of sectors is a union of disks with one boundary circle each.
    Rational gamma;
    for (const auto& [t, c] : q.terms()) {
      gamma -= c * static_cast<long>(testsupport::oracle_components(m, testsupport::label_set(q, t)).size());
    }
    EXPECT_EQ(v.c_gamma, gamma);
  }
}

TEST(Tqft, TopologicalCheck) {
  const auto c = topological_check(gen_named("LW"), make_kp_disk3(), kPaper);
  EXPECT_FALSE(c.topological);
  EXPECT_FALSE(c.sum_rule.has_value());
  const auto d = topological_check(gen_cyclic(7), make_resolved_pie(7), kPaper);
  EXPECT_TRUE(d.topological);
  EXPECT_EQ(d.sum_rule, true);
  const auto e = topological_check_area_law(gen_cyclic(7), make_resolved_pie(7));
  EXPECT_TRUE(e.topological);
  ASSERT_TRUE(e.area_law.has_value());
}
