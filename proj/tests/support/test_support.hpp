#pragma once

// Independent reference implementations and random generators for tests.
// Nothing here calls the library's counting or evaluation code.

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "teeprobe/arrangement.hpp"
#include "teeprobe/info_quantity.hpp"
#include "teeprobe/tqft_eval.hpp"
#include "teeprobe/tripartite.hpp"

namespace testsupport {

using teeprobe::Rational;

/// A planar map as counterclockwise face triples per vertex plus edges
/// (vertex a, vertex b, faces f and g). Face index faces.size() is "O".
struct TripleMap {
  struct E {
    int a, b, f, g;
  };
  std::vector<std::string> faces;
  std::vector<std::array<int, 3>> corners;
  std::vector<E> edges;

  int outer() const { return static_cast<int>(faces.size()); }

  std::string label(int f) const { return f == outer() ? std::string("O") : faces[f]; }

  teeprobe::Arrangement build(const std::string& name = "map") const {
    teeprobe::ArrangementBuilder b(faces);
    for (const auto& c : corners) b.add_vertex(c);
    for (const auto& e : edges) b.add_edge(e.a, e.b, e.f, e.g);
    return b.build(name);
  }

  /// Face label sets of all vertices.
  std::vector<std::set<std::string>> vertex_sets() const {
    std::vector<std::set<std::string>> out;
    for (const auto& c : corners) out.push_back({label(c[0]), label(c[1]), label(c[2])});
    return out;
  }
};

inline std::vector<std::string> letters(int n) {
  // Same convention as the library's defaults, spelled out independently.
  std::vector<std::string> out;
  if (n <= 25) {
    for (char c = 'A'; static_cast<int>(out.size()) < n; ++c) {
      if (c != 'O') out.emplace_back(1, c);
    }
  } else {
    for (int i = 1; i <= n; ++i) out.push_back("A" + std::to_string(i));
  }
  return out;
}

/// Disk cut into sectors 0..n-1 with the centre resolved along a
/// triangulation; triangle (i<j<k) becomes a vertex with faces (i, j, k).
inline TripleMap pie_map(const std::vector<std::string>& labels, const std::vector<std::array<int, 3>>& tris) {
  TripleMap m;
  m.faces = labels;
  const int n = static_cast<int>(labels.size());
  const int O = m.outer();
  std::map<std::pair<int, int>, std::vector<int>> owners;
  for (auto t : tris) {
    std::sort(t.begin(), t.end());
    const int v = static_cast<int>(m.corners.size());
    m.corners.push_back({t[0], t[1], t[2]});
    owners[{t[0], t[1]}].push_back(v);
    owners[{t[1], t[2]}].push_back(v);
    owners[{t[0], t[2]}].push_back(v);
  }
  std::vector<int> rim(n);
  for (int i = 0; i < n; ++i) {
    rim[i] = static_cast<int>(m.corners.size());
    m.corners.push_back({O, (i + 1) % n, i});
  }
  for (const auto& [side, vs] : owners) {
    const auto [i, j] = side;
    const bool boundary = j == i + 1 || (i == 0 && j == n - 1);
    if (boundary) {
      const int r = (j == i + 1) ? i : n - 1;
      m.edges.push_back({rim[r], vs.at(0), i, j});
    } else {
      m.edges.push_back({vs.at(0), vs.at(1), i, j});
    }
  }
  for (int i = 0; i < n; ++i) m.edges.push_back({rim[(i + n - 1) % n], rim[i], i, O});
  return m;
}

/// Fan triangulation around the last sector.
inline std::vector<std::array<int, 3>> fan(int n) {
  std::vector<std::array<int, 3>> t;
  for (int i = 0; i + 2 < n; ++i) t.push_back({i, i + 1, n - 1});
  return t;
}

inline void triangulate(int i, int j, std::mt19937_64& rng, std::vector<std::array<int, 3>>& out) {
  if (j - i < 2) return;
  const int k = std::uniform_int_distribution<int>(i + 1, j - 1)(rng);
  out.push_back({i, k, j});
  triangulate(i, k, rng, out);
  triangulate(k, j, rng, out);
}

inline std::vector<std::array<int, 3>> random_triangulation(int n, std::mt19937_64& rng) {
  std::vector<std::array<int, 3>> t;
  triangulate(0, n - 1, rng, t);
  return t;
}

/// n parallel bands; boundary i|i+1 is a chord with endpoints l_i, r_i.
inline TripleMap strips_map(int n) {
  TripleMap m;
  m.faces = letters(n);
  const int O = m.outer();
  std::vector<int> l(n - 1), r(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    l[i] = static_cast<int>(m.corners.size());
    m.corners.push_back({O, i + 1, i});
    r[i] = static_cast<int>(m.corners.size());
    m.corners.push_back({O, i, i + 1});
    m.edges.push_back({l[i], r[i], i, i + 1});
  }
  m.edges.push_back({l[0], r[0], 0, O});
  for (int i = 1; i + 1 < n; ++i) {
    m.edges.push_back({l[i - 1], l[i], i, O});
    m.edges.push_back({r[i - 1], r[i], i, O});
  }
  m.edges.push_back({l[n - 2], r[n - 2], n - 1, O});
  return m;
}

/// Whitehead move on edge e: P|Q between u (third face X) and v (third
/// face Y) becomes X|Y. Returns false when the edge cannot be flipped.
inline bool t1_flip(TripleMap& m, int e) {
  auto& ed = m.edges[e];
  const int u = ed.a, v = ed.b;
  auto rotate_to = [](std::array<int, 3> c, int f, int g) {
    for (int i = 0; i < 3; ++i) {
      if (c[i] == f && c[(i + 1) % 3] == g) return std::array<int, 3>{c[i], c[(i + 1) % 3], c[(i + 2) % 3]};
    }
    return std::array<int, 3>{-1, -1, -1};
  };
  // Orient so that u reads (P, Q, X) counterclockwise.
  auto cu = rotate_to(m.corners[u], ed.f, ed.g);
  if (cu[0] < 0) cu = rotate_to(m.corners[u], ed.g, ed.f);
  const int P = cu[0], Q = cu[1], X = cu[2];
  const auto cv = rotate_to(m.corners[v], Q, P);
  if (cv[0] < 0) return false;
  const int Y = cv[2];
  if (X == Y) return false;
  for (auto& other : m.edges) {
    if (&other == &ed) continue;
    const bool py = (other.f == P && other.g == Y) || (other.f == Y && other.g == P);
    const bool qx = (other.f == Q && other.g == X) || (other.f == X && other.g == Q);
    if (py && (other.a == v || other.b == v)) (other.a == v ? other.a : other.b) = u;
    else if (qx && (other.a == u || other.b == u)) (other.a == u ? other.a : other.b) = v;
  }
  m.corners[u] = {P, Y, X};
  m.corners[v] = {Q, X, Y};
  ed.f = X;
  ed.g = Y;
  return true;
}

/// Random valid map: a random pie resolution followed by random flips that
/// keep the map valid.
inline TripleMap random_flipped_pie(int n, int flips, std::mt19937_64& rng) {
  TripleMap m = pie_map(letters(n), random_triangulation(n, rng));
  for (int i = 0; i < flips; ++i) {
    TripleMap trial = m;
    const int e = std::uniform_int_distribution<int>(0, static_cast<int>(m.edges.size()) - 1)(rng);
    if (!t1_flip(trial, e)) continue;
    try {
      if (trial.build().valid()) m = std::move(trial);
    } catch (const std::exception&) {
    }
  }
  return m;
}

// ------------------------------------------------------------ evaluation

inline teeprobe::SymEntropy sphere(int k) {
  if (k < 2) return {};
  return {Rational(2 * (k - 1)), Rational(-k)};
}

inline int count_punctures(const std::vector<std::set<std::string>>& vertices, const std::set<std::string>& x) {
  int k = 0;
  for (const auto& v : vertices) {
    int inside = 0;
    for (const auto& f : v) inside += x.count(f) ? 1 : 0;
    if (inside == 1 || inside == 2) ++k;
  }
  return k;
}

inline std::set<std::string> label_set(const teeprobe::InfoQuantity& q, teeprobe::PartySet t) {
  const auto l = q.labels(t);
  return {l.begin(), l.end()};
}

/// Merged-sphere substitution computed straight from vertex triples.
inline teeprobe::SymEntropy oracle_paper(const teeprobe::InfoQuantity& q, const TripleMap& m) {
  const auto vs = m.vertex_sets();
  teeprobe::SymEntropy total;
  for (const auto& [t, c] : q.terms()) total += sphere(count_punctures(vs, label_set(q, t))) * c;
  return total * Rational(1, 2);
}

/// Components of x under edge adjacency in the map.
inline std::vector<std::set<std::string>> oracle_components(const TripleMap& m, const std::set<std::string>& x) {
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& e : m.edges) {
    adj[m.label(e.f)].insert(m.label(e.g));
    adj[m.label(e.g)].insert(m.label(e.f));
  }
  std::vector<std::set<std::string>> out;
  std::set<std::string> seen;
  for (const auto& f : x) {
    if (seen.count(f)) continue;
    std::set<std::string> comp{f};
    std::vector<std::string> stack{f};
    seen.insert(f);
    while (!stack.empty()) {
      const auto cur = stack.back();
      stack.pop_back();
      for (const auto& nb : adj[cur]) {
        if (x.count(nb) && !seen.count(nb)) {
          seen.insert(nb);
          comp.insert(nb);
          stack.push_back(nb);
        }
      }
    }
    out.push_back(comp);
  }
  return out;
}

/// One sphere per component.
inline teeprobe::SymEntropy oracle_additive(const teeprobe::InfoQuantity& q, const TripleMap& m) {
  const auto vs = m.vertex_sets();
  teeprobe::SymEntropy total;
  for (const auto& [t, c] : q.terms()) {
    const auto x = label_set(q, t);
    for (const auto& comp : oracle_components(m, x)) {
      int k = 0;
      for (const auto& v : vs) {
        int inside = 0;
        bool touches = false;
        for (const auto& f : v) {
          inside += x.count(f) ? 1 : 0;
          touches = touches || comp.count(f);
        }
        if ((inside == 1 || inside == 2) && touches) ++k;
      }
      total += sphere(k) * c;
    }
  }
  return total * Rational(1, 2);
}

// ------------------------------------------------------------ quantities

/// Coefficients keyed by the concatenated labels of each region.
inline std::map<std::string, Rational> term_map(const teeprobe::InfoQuantity& q) {
  std::map<std::string, Rational> out;
  for (const auto& [t, c] : q.terms()) {
    std::string key;
    for (const auto& l : q.labels(t)) key += l;
    out[key] = c;
  }
  return out;
}

/// Sum over the 2^m - 1 nonempty unions of the given blocks with sign
/// (-1)^{|J|+1}, each union additionally joined with w.
inline void add_inclusion_exclusion(std::map<std::set<std::string>, Rational>& acc,
                                    const std::vector<std::set<std::string>>& blocks, const std::set<std::string>& w,
                                    const Rational& scale) {
  const int m = static_cast<int>(blocks.size());
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::set<std::string> u = w;
    int bits = 0;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        u.insert(blocks[i].begin(), blocks[i].end());
        ++bits;
      }
    }
    acc[u] += (bits % 2 == 1 ? scale : -scale);
  }
}

/// A random sum of -I3(X:Y:Z|W) terms over n parties.
inline teeprobe::TripartiteForm random_tripartite_form(int n, std::mt19937_64& rng, int max_terms = 4,
                                                       bool allow_conditional = true) {
  teeprobe::TripartiteForm form{letters(n), {}};
  const int terms = std::uniform_int_distribution<int>(1, max_terms)(rng);
  while (static_cast<int>(form.terms.size()) < terms) {
    teeprobe::TripartiteTerm t;
    const int slots = allow_conditional && (rng() % 2 == 0) ? 5 : 4;  // X, Y, Z, [W], unused
    for (int p = 0; p < n; ++p) {
      switch (std::uniform_int_distribution<int>(0, slots - 1)(rng)) {
        case 0: t.x = t.x.with(p); break;
        case 1: t.y = t.y.with(p); break;
        case 2: t.z = t.z.with(p); break;
        case 3: break;
        default: t.w = t.w.with(p); break;
      }
    }
    if (t.x.empty() || t.y.empty() || t.z.empty()) continue;
    form.terms.push_back(t);
  }
  return form;
}

/// Random quantity with small rational coefficients over n parties.
inline teeprobe::InfoQuantity random_quantity(int n, int terms, std::mt19937_64& rng) {
  teeprobe::InfoQuantity q(letters(n));
  std::uniform_int_distribution<std::uint64_t> region(1, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  for (int i = 0; i < terms; ++i) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    q.add_term(teeprobe::PartySet(region(rng)), c);
  }
  return q;
}

}  // namespace testsupport
