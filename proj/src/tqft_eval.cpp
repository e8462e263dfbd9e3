#include "teeprobe/tqft_eval.hpp"

#include <numeric>
#include <sstream>

#include "teeprobe/entropy_algebra.hpp"
#include "teeprobe/errors.hpp"

namespace teeprobe {

namespace {

/// Appends "c sym" to a signed sum; magnitude 1 is left implicit.
void append_term(std::string& out, const Rational& c, std::string_view sym) {
  if (c == 0) return;
  const Rational mag = abs(c);
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mag != 1 || sym.empty()) {
    out += to_string(mag);
    if (!sym.empty()) out += ' ';
  }
  out += sym;
}

/// Quantity parties located on an arrangement's faces.
struct Binding {
  std::vector<int> party_face;
  std::vector<PartySet> vertex_parties;  // parties around each vertex
  std::vector<PartySet> adjacency;  // party -> adjacent parties
  std::vector<std::pair<int, int>> edge_parties;  // party on each side, -1 if none

  Binding(const InfoQuantity& q, const Arrangement& a) {
    a.require_valid();
    const int n = q.party_count();
    std::vector<int> face_party(a.face_count(), -1);
    for (int i = 0; i < n; ++i) {
      const auto& label = q.parties()[i];
      const int f = a.face_index(label);
      if (f < 0 || f == a.outer_face()) {
        throw InputError("party '" + label + "' is not a region of geometry " + a.name());
      }
      party_face.push_back(f);
      face_party[f] = i;
    }
    vertex_parties.resize(a.vertices().size());
    for (std::size_t v = 0; v < a.vertices().size(); ++v) {
      a.vertex_faces(static_cast<int>(v)).for_each([&](int f) {
        if (face_party[f] >= 0) vertex_parties[v] = vertex_parties[v].with(face_party[f]);
      });
    }
    adjacency.resize(n);
    for (const auto& e : a.edges()) {
      const int l = face_party[e.left], r = face_party[e.right];
      edge_parties.emplace_back(l, r);
      if (l >= 0 && r >= 0) {
        adjacency[l] = adjacency[l].with(r);
        adjacency[r] = adjacency[r].with(l);
      }
    }
  }

  std::vector<PartySet> components(PartySet x) const {
    std::vector<PartySet> out;
    PartySet rest = x;
    while (!rest.empty()) {
      PartySet comp = PartySet::single(rest.lowest());
      PartySet frontier = comp;
      while (!frontier.empty()) {
        PartySet grown;
        frontier.for_each([&](int p) { grown |= adjacency[p]; });
        frontier = (grown & rest) - comp;
        comp |= frontier;
      }
      out.push_back(comp);
      rest = rest - comp;
    }
    return out;
  }

  Region faces(PartySet x) const {
    Region r;
    x.for_each([&](int p) { r = r.with(party_face[p]); });
    return r;
  }

  static bool punctured(PartySet around, PartySet x) {
    const int k = (around & x).size();
    return k >= 1 && k <= 2;
  }

  int punctures(PartySet x) const {
    int k = 0;
    for (const auto& vp : vertex_parties) k += punctured(vp, x);
    return k;
  }

  std::vector<int> component_punctures(const std::vector<PartySet>& comps, PartySet x) const {
    std::vector<int> counts(comps.size(), 0);
    for (const auto& vp : vertex_parties) {
      if (!punctured(vp, x)) continue;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (vp.intersects(comps[c])) {
          ++counts[c];
          break;
        }
      }
    }
    return counts;
  }
};

std::string region_text(const InfoQuantity& q, PartySet x) {
  std::string out;
  for (const auto& l : q.labels(x)) out += l;
  return out;
}

}  // namespace

std::string to_string(const SymEntropy& v) {
  std::string out;
  append_term(out, v.c_logD, "logD");
  append_term(out, v.c_K, "K");
  return out.empty() ? "0" : out;
}

SymEntropy sphere_entropy_symbolic(int k) {
  if (k < 0) throw InputError("puncture count must be nonnegative");
  if (k <= 1) return {};
  return {Rational(2 * (k - 1)), Rational(-k)};
}

std::string_view to_string(EvalMode m) { return m == EvalMode::paper ? "paper" : "additive"; }

EvalMode parse_eval_mode(std::string_view s) {
  if (s == "paper") return EvalMode::paper;
  if (s == "additive") return EvalMode::additive;
  throw InputError("unknown TQFT mode '" + std::string(s) + "' (expected paper or additive)");
}

std::map<int, Rational> Tally::net() const {
  std::map<int, Rational> out = positive;
  for (const auto& [k, w] : negative) out[k] -= w;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string to_string(const Tally& t) {
  std::string body;
  for (auto it = t.positive.rbegin(); it != t.positive.rend(); ++it) {
    append_term(body, it->second, "S_" + std::to_string(it->first));
  }
  for (auto it = t.negative.rbegin(); it != t.negative.rend(); ++it) {
    append_term(body, -it->second, "S_" + std::to_string(it->first));
  }
  return "(1/2)[" + (body.empty() ? std::string("0") : body) + "]";
}

SymEntropy eval_tqft(const InfoQuantity& q, const Arrangement& a, const EvalOptions& options, Tally* tally) {
  const Binding b(q, a);
  std::map<int, Rational> weights;  // coefficient of S_k, before the overall 1/2
  auto record = [&](int k, const Rational& c) {
    weights[k] += c;
    if (tally) (c > 0 ? tally->positive[k] : tally->negative[k]) += abs(c);
  };
  const bool need_components = options.mode == EvalMode::additive || options.strict;
  for (const auto& [x, c] : q.terms()) {
    std::vector<int> spheres;
    if (!need_components) {
      spheres.push_back(b.punctures(x));
    } else {
      const auto comps = b.components(x);
      if (options.strict) {
        for (const auto& comp : comps) {
          const int circuits = boundary_b0(a, b.faces(comp));
          if (circuits > 1) {
            throw UnsupportedGeometry("union " + region_text(q, x) + " has a component bounded by " +
                                      std::to_string(circuits) +
                                      " circuits; its doubled surface is not a sphere (use --mode area-law)");
          }
        }
      }
      if (options.mode == EvalMode::additive) {
        spheres = b.component_punctures(comps, x);
      } else {
        spheres.push_back(b.punctures(x));
      }
    }
    for (int k : spheres) record(k, c);
    if (tally) tally->terms.push_back({q.labels(x), c, std::move(spheres)});
  }
  SymEntropy total;
  for (const auto& [k, w] : weights) total += sphere_entropy_symbolic(k) * w;
  total *= Rational(1, 2);
  return total;
}

AreaLawExpr eval_area_law(const InfoQuantity& q, const Arrangement& a) {
  const Binding b(q, a);
  const auto& edges = a.edges();
  const int nv = static_cast<int>(a.vertices().size());
  std::vector<Rational> lengths(edges.size());
  Rational gamma;
  std::vector<int> parent(nv);
  std::vector<char> touched(nv);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [x, c] : q.terms()) {
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(touched.begin(), touched.end(), 0);
    int circuits = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [l, r] = b.edge_parties[e];
      const bool in_l = l >= 0 && x.contains(l);
      const bool in_r = r >= 0 && x.contains(r);
      if (in_l == in_r) continue;
      lengths[e] += c;
      for (int v : {edges[e].v1, edges[e].v2}) {
        if (!touched[v]) {
          touched[v] = 1;
          ++circuits;
        }
      }
      const int ra = find(edges[e].v1), rb = find(edges[e].v2);
      if (ra != rb) {
        parent[rb] = ra;
        --circuits;
      }
    }
    gamma -= c * circuits;
  }
  AreaLawExpr out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (lengths[e] != 0) out.length_coeffs.emplace(edges[e].id, lengths[e]);
  }
  out.c_gamma = gamma;
  return out;
}

namespace {

std::string edge_symbol(const Arrangement& a, int id) {
  for (const auto& e : a.edges()) {
    if (e.id == id) return "l" + std::to_string(id) + "(" + a.faces()[e.left] + "|" + a.faces()[e.right] + ")";
  }
  return "l" + std::to_string(id);
}

}  // namespace

std::string to_string(const AreaLawExpr& v, const Arrangement& a) {
  std::string out;
  for (const auto& [id, c] : v.length_coeffs) append_term(out, c, "alpha " + edge_symbol(a, id));
  if (out.empty()) return to_string(v.c_gamma) + " gamma";
  out += v.c_gamma < 0 ? " - " : " + ";
  out += to_string(abs(v.c_gamma)) + " gamma";
  return out;
}

TopologicalCheck topological_check(const InfoQuantity& q, const Arrangement& a, const EvalOptions& options) {
  TopologicalCheck out;
  const SymEntropy v = eval_tqft(q, a, options);
  out.topological = v.c_K == 0;
  if (options.mode == EvalMode::paper && out.topological) out.sum_rule = v.c_logD == -sum_coeffs(q);
  out.tqft = v;
  return out;
}

TopologicalCheck topological_check_area_law(const InfoQuantity& q, const Arrangement& a) {
  TopologicalCheck out;
  auto v = eval_area_law(q, a);
  out.topological = v.lengths_vanish();
  out.area_law = std::move(v);
  return out;
}

double evaluate_numeric(const SymEntropy& v, const DerivedScalars& s) {
  return v.c_logD.get_d() * s.log_D + v.c_K.get_d() * s.K;
}

double evaluate_numeric(const SymEntropy& v, const AnyonModel& m) { return evaluate_numeric(v, derived_scalars(m)); }

nlohmann::json to_json(const SymEntropy& v) {
  return {{"c_logD", to_string(v.c_logD)}, {"c_K", to_string(v.c_K)}, {"text", to_string(v)}};
}

nlohmann::json to_json(const Tally& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& term : t.terms) {
    terms.push_back({{"region", term.region}, {"coeff", to_string(term.coeff)}, {"spheres", term.spheres}});
  }
  auto weights = [](const std::map<int, Rational>& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, w] : m) j[std::to_string(k)] = to_string(w);
    return j;
  };
  return {{"terms", terms}, {"positive", weights(t.positive)}, {"negative", weights(t.negative)},
          {"net", weights(t.net())}, {"text", to_string(t)}};
}

nlohmann::json to_json(const AreaLawExpr& v, const Arrangement& a) {
  nlohmann::json lengths = nlohmann::json::array();
  for (const auto& [id, c] : v.length_coeffs) {
    nlohmann::json row{{"edge", id}, {"coeff", to_string(c)}};
    for (const auto& e : a.edges()) {
      if (e.id == id) row["faces"] = {a.faces()[e.left], a.faces()[e.right]};
    }
    lengths.push_back(row);
  }
  return {{"length_coeffs", lengths}, {"c_gamma", to_string(v.c_gamma)}, {"text", to_string(v, a)}};
}

}  // namespace teeprobe
