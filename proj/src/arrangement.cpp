#include "teeprobe/arrangement.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "teeprobe/errors.hpp"
#include "teeprobe/info_quantity.hpp"

namespace teeprobe {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

Arrangement::Arrangement(std::vector<std::string> faces, std::vector<Edge> edges, std::vector<Vertex> vertices,
                         std::string name)
    : name_(std::move(name)), faces_(std::move(faces)), edges_(std::move(edges)), vertices_(std::move(vertices)) {
  if (faces_.size() > static_cast<std::size_t>(Region::kCapacity)) {
    throw InputError("arrangement has more than 64 faces");
  }
  std::set<std::string> seen;
  for (const auto& f : faces_) {
    if (!seen.insert(f).second) throw InputError("duplicate face label '" + f + "'");
    if (f == kOuterLabel) {
      outer_ = static_cast<int>(&f - faces_.data());
    } else {
      validate_party_label(f);
    }
  }
  if (outer_ < 0) throw InputError("arrangement has no outer face \"O\"");
  const int nf = face_count();
  const int nv = static_cast<int>(vertices_.size());
  const int ne = static_cast<int>(edges_.size());
  for (const auto& e : edges_) {
    if (e.v1 < 0 || e.v1 >= nv || e.v2 < 0 || e.v2 >= nv) {
      throw InputError("edge " + std::to_string(e.id) + " references an unknown vertex");
    }
    if (e.left < 0 || e.left >= nf || e.right < 0 || e.right >= nf) {
      throw InputError("edge " + std::to_string(e.id) + " references an unknown face");
    }
  }
  for (const auto& v : vertices_) {
    for (int e : v.edges) {
      if (e < 0 || e >= ne) throw InputError("vertex " + std::to_string(v.id) + " references an unknown edge");
    }
  }
  derive();
  validate_structure();
}

void Arrangement::derive() {
  vertex_faces_.assign(vertices_.size(), Region{});
  adjacency_.assign(faces_.size(), Region{});
  for (const auto& e : edges_) {
    const Region sides = Region::single(e.left).with(e.right);
    vertex_faces_[e.v1] |= sides;
    vertex_faces_[e.v2] |= sides;
    adjacency_[e.left] |= Region::single(e.right);
    adjacency_[e.right] |= Region::single(e.left);
  }
}

void Arrangement::validate_structure() {
  auto& out = report_.violations;
  const int nv = static_cast<int>(vertices_.size());
  const int ne = static_cast<int>(edges_.size());
  const int nf = face_count();

  std::vector<int> ends(ne, 0);
  for (int i = 0; i < ne; ++i) {
    const Edge& e = edges_[i];
    if (e.v1 == e.v2) out.push_back("edge " + std::to_string(e.id) + " is a self-loop");
    if (e.left == e.right) out.push_back("edge " + std::to_string(e.id) + " has the same face on both sides");
  }

  bool rotations_ok = true;
  for (int vi = 0; vi < nv; ++vi) {
    const Vertex& v = vertices_[vi];
    const std::string vname = "vertex " + std::to_string(v.id);
    for (int e : v.edges) {
      ++ends[e];
      if (edges_[e].v1 != vi && edges_[e].v2 != vi) {
        out.push_back(vname + " lists edge " + std::to_string(edges_[e].id) + " which does not end there");
        rotations_ok = false;
      }
    }
    if (v.edges.size() != 3) {
      out.push_back(vname + " has degree " + std::to_string(v.edges.size()) + " (expected 3)");
      rotations_ok = false;
      continue;
    }
    if (vertex_faces_[vi].size() != 3) {
      out.push_back(vname + " does not have three distinct faces around it");
      rotations_ok = false;
      continue;
    }
    // Leaving along edge j, the face on the left is the one shared with the
    // next edge counterclockwise.
    for (int j = 0; j < 3; ++j) {
      const Edge& e = edges_[v.edges[j]];
      const Edge& next = edges_[v.edges[(j + 1) % 3]];
      const Region shared = Region::single(e.left).with(e.right) & Region::single(next.left).with(next.right);
      const int left_out = (e.v1 == vi) ? e.left : e.right;
      if (shared.size() != 1 || shared.lowest() != left_out) {
        out.push_back(vname + " has an inconsistent orientation at edge " + std::to_string(e.id));
        rotations_ok = false;
        break;
      }
    }
  }
  for (int i = 0; i < ne; ++i) {
    if (ends[i] != 2) {
      out.push_back("edge " + std::to_string(edges_[i].id) + " appears in " + std::to_string(ends[i]) +
                    " vertex rotations (expected 2)");
      rotations_ok = false;
    }
  }

  if (nv == 0) {
    out.push_back("arrangement has no vertices");
    return;
  }
  DisjointSets ds(nv);
  int components = nv;
  for (const auto& e : edges_) {
    if (ds.unite(e.v1, e.v2)) --components;
  }
  if (components != 1) out.push_back("map is disconnected (" + std::to_string(components) + " components)");

  const int euler = nv - ne + nf;
  if (euler != 2) {
    out.push_back("Euler characteristic V - E + F = " + std::to_string(nv) + " - " + std::to_string(ne) + " + " +
                  std::to_string(nf) + " = " + std::to_string(euler) + " (expected 2)");
  }

  if (!rotations_ok || !out.empty()) return;

  // Face walks: darts 2e (v1 -> v2, left face) and 2e+1 (v2 -> v1, right face).
  auto head = [&](int d) { return d % 2 == 0 ? edges_[d / 2].v2 : edges_[d / 2].v1; };
  auto left_of = [&](int d) { return d % 2 == 0 ? edges_[d / 2].left : edges_[d / 2].right; };
  auto next_dart = [&](int d) {
    const int v = head(d);
    const auto& rot = vertices_[v].edges;
    const auto pos = std::find(rot.begin(), rot.end(), d / 2) - rot.begin();
    const int e = rot[(pos + 2) % 3];
    return 2 * e + (edges_[e].v1 == v ? 0 : 1);
  };
  std::vector<char> seen(2 * ne, 0);
  std::vector<int> walks(nf, 0);
  for (int start = 0; start < 2 * ne; ++start) {
    if (seen[start]) continue;
    const int face = left_of(start);
    std::set<int> walk_vertices;
    bool consistent = true;
    for (int d = start; !seen[d]; d = next_dart(d)) {
      seen[d] = 1;
      walk_vertices.insert(head(d));
      if (left_of(d) != face) consistent = false;
    }
    if (!consistent) {
      out.push_back("boundary walk of face " + faces_[face] + " changes face");
      continue;
    }
    ++walks[face];
    if (walk_vertices.size() < 2) {
      out.push_back("a boundary circuit of face " + faces_[face] + " has fewer than 2 vertices");
    }
  }
  for (int f = 0; f < nf; ++f) {
    if (walks[f] == 0) out.push_back("face " + faces_[f] + " has no boundary");
    if (walks[f] > 1) {
      out.push_back("face " + faces_[f] + " has " + std::to_string(walks[f]) + " boundary walks (not a disk)");
    }
  }
}

int Arrangement::face_index(std::string_view label) const {
  const auto it = std::find(faces_.begin(), faces_.end(), label);
  return it == faces_.end() ? -1 : static_cast<int>(it - faces_.begin());
}

Region Arrangement::internal_faces() const { return Region::first(face_count()).without(outer_); }

Region Arrangement::region(std::span<const std::string> labels) const {
  Region r;
  for (const auto& l : labels) {
    if (l == kOuterLabel) throw InputError("region may not contain the outer face \"O\"");
    const int i = face_index(l);
    if (i < 0) throw InputError("unknown face '" + l + "'");
    r = r.with(i);
  }
  return r;
}

std::vector<std::string> Arrangement::labels(Region r) const {
  std::vector<std::string> out;
  r.for_each([&](int i) { out.push_back(faces_.at(i)); });
  return out;
}

void Arrangement::require_valid() const {
  if (!valid()) {
    throw InputError("invalid arrangement" + (name_.empty() ? std::string() : " " + name_) + ": " +
                     join(report_.violations, "; "));
  }
}

Arrangement Arrangement::relabeled(const std::map<std::string, std::string>& mapping) const {
  std::vector<std::string> faces = faces_;
  for (auto& f : faces) {
    if (f == kOuterLabel) continue;
    if (auto it = mapping.find(f); it != mapping.end()) f = it->second;
  }
  return Arrangement(std::move(faces), edges_, vertices_, name_);
}

// ---------------------------------------------------------------- builder

ArrangementBuilder::ArrangementBuilder(std::vector<std::string> internal_faces) : faces_(std::move(internal_faces)) {
  faces_.emplace_back(kOuterLabel);
}

int ArrangementBuilder::face(std::string_view label) const {
  const auto it = std::find(faces_.begin(), faces_.end(), label);
  if (it == faces_.end()) throw InputError("unknown face '" + std::string(label) + "'");
  return static_cast<int>(it - faces_.begin());
}

int ArrangementBuilder::add_vertex(std::array<int, 3> ccw_faces) {
  corners_.push_back(ccw_faces);
  return static_cast<int>(corners_.size()) - 1;
}

void ArrangementBuilder::add_edge(int a, int b, int f, int g) { edges_.push_back({a, b, f, g}); }

Arrangement ArrangementBuilder::build(std::string name) const {
  const int nv = static_cast<int>(corners_.size());
  std::vector<std::array<int, 3>> slots(nv, {-1, -1, -1});
  auto slot_of = [&](int v, int f, int g) {
    const auto& c = corners_.at(v);
    for (int i = 0; i < 3; ++i) {
      const int p = c[i], q = c[(i + 1) % 3];
      if ((p == f && q == g) || (p == g && q == f)) return i;
    }
    throw InputError("vertex " + std::to_string(v) + " has no corner between faces " + faces_.at(f) + " and " +
                     faces_.at(g));
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& pe = edges_[i];
    const int sa = slot_of(pe.a, pe.f, pe.g);
    const int sb = slot_of(pe.b, pe.f, pe.g);
    const auto& c = corners_[pe.a];
    edges.push_back({static_cast<int>(i), pe.a, pe.b, c[(sa + 1) % 3], c[sa]});
    for (auto [v, s] : {std::pair{pe.a, sa}, std::pair{pe.b, sb}}) {
      if (slots[v][s] != -1) throw InputError("vertex " + std::to_string(v) + " corner used twice");
      slots[v][s] = static_cast<int>(i);
    }
  }
  std::vector<Vertex> vertices;
  for (int v = 0; v < nv; ++v) {
    Vertex vx{v, {}};
    for (int s : slots[v]) {
      if (s >= 0) vx.edges.push_back(s);
    }
    vertices.push_back(std::move(vx));
  }
  return Arrangement(faces_, std::move(edges), std::move(vertices), std::move(name));
}

// ----------------------------------------------------------- constructors

Arrangement make_pie(const std::vector<std::string>& labels, const std::vector<std::array<int, 3>>& triangles,
                     std::string name) {
  const int n = static_cast<int>(labels.size());
  if (n < 3) throw InputError("a pie needs at least 3 sectors");
  if (static_cast<int>(triangles.size()) != n - 2) {
    throw InputError("a triangulation of " + std::to_string(n) + " sectors has " + std::to_string(n - 2) +
                     " triangles");
  }
  ArrangementBuilder b(labels);
  const int outer = b.outer();
  std::map<std::pair<int, int>, std::vector<int>> sides;
  std::vector<int> tri_vertex;
  for (auto t : triangles) {
    std::sort(t.begin(), t.end());
    if (t[0] < 0 || t[2] >= n || t[0] == t[1] || t[1] == t[2]) throw InputError("bad triangle in pie");
    const int v = b.add_vertex({t[0], t[1], t[2]});
    tri_vertex.push_back(v);
    sides[{t[0], t[1]}].push_back(v);
    sides[{t[1], t[2]}].push_back(v);
    sides[{t[0], t[2]}].push_back(v);
  }
  std::vector<int> outer_vertex(n);
  for (int i = 0; i < n; ++i) outer_vertex[i] = b.add_vertex({outer, (i + 1) % n, i});
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const auto key = std::minmax(i, j);
    const auto it = sides.find({key.first, key.second});
    if (it == sides.end() || it->second.size() != 1) throw InputError("triangulation does not cover the polygon");
    b.add_edge(outer_vertex[i], it->second.front(), i, j);
    sides.erase(it);
  }
  for (const auto& [d, vs] : sides) {
    if (vs.size() != 2) throw InputError("triangulation diagonal is not shared by exactly two triangles");
    b.add_edge(vs[0], vs[1], d.first, d.second);
  }
  for (int i = 0; i < n; ++i) b.add_edge(outer_vertex[(i + n - 1) % n], outer_vertex[i], i, outer);
  return b.build(std::move(name));
}

Arrangement make_resolved_pie(int n) {
  if (n < 3 || n > 63) throw InputError("resolved_pie(n) requires 3 <= n <= 63");
  std::vector<std::array<int, 3>> fan;
  for (int i = 0; i + 2 < n; ++i) fan.push_back({i, i + 1, n - 1});
  return make_pie(default_labels(n), fan, "resolved_pie(" + std::to_string(n) + ")");
}

Arrangement make_kp_disk3() {
  std::vector<std::array<int, 3>> one{{0, 1, 2}};
  return make_pie(default_labels(3), one, "kp_disk3");
}

Arrangement make_strips(int n) {
  if (n < 2 || n > 63) throw InputError("strips(n) requires 2 <= n <= 63");
  ArrangementBuilder b(default_labels(n));
  const int outer = b.outer();
  std::vector<int> l(n - 1), r(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    l[i] = b.add_vertex({outer, i + 1, i});
    r[i] = b.add_vertex({outer, i, i + 1});
    b.add_edge(l[i], r[i], i, i + 1);
  }
  b.add_edge(l[0], r[0], 0, outer);
  for (int i = 1; i + 1 < n; ++i) {
    b.add_edge(l[i - 1], l[i], i, outer);
    b.add_edge(r[i - 1], r[i], i, outer);
  }
  b.add_edge(l[n - 2], r[n - 2], n - 1, outer);
  return b.build("strips(" + std::to_string(n) + ")");
}

namespace {

std::optional<int> parse_suffix(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  std::string_view rest = name.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size()) return std::nullopt;
  return value;
}

}  // namespace

Arrangement builtin_arrangement(std::string_view name) {
  if (name == "kp_disk3") return make_kp_disk3();
  if (auto n = parse_suffix(name, "resolved_pie")) return make_resolved_pie(*n);
  if (auto n = parse_suffix(name, "pie")) return make_resolved_pie(*n);
  if (auto n = parse_suffix(name, "strips")) return make_strips(*n);
  throw InputError("unknown builtin geometry '" + std::string(name) +
                   "' (expected kp_disk3, pie<n>, resolved_pie(n), strips(n))");
}

Arrangement resolve_arrangement(std::string_view ref) {
  const std::filesystem::path path{std::string(ref)};
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return builtin_arrangement(ref);
  std::ifstream in(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse geometry file " + path.string() + ": " + e.what());
  }
  std::string name = j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                                                   : path.stem().string();
  return arrangement_from_json(j, std::move(name));
}

// ------------------------------------------------------------- counting

namespace {

void check_region(const Arrangement& a, Region r) {
  if (!a.internal_faces().contains(r)) throw InputError("region contains unknown or outer faces");
}

}  // namespace

std::vector<Region> union_components(const Arrangement& a, Region r) {
  check_region(a, r);
  std::vector<Region> out;
  Region rest = r;
  while (!rest.empty()) {
    Region comp = Region::single(rest.lowest());
    Region frontier = comp;
    while (!frontier.empty()) {
      Region grown;
      frontier.for_each([&](int f) { grown |= a.adjacent_faces(f); });
      frontier = (grown & rest) - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

std::vector<int> boundary_punctures(const Arrangement& a, Region r) {
  const auto comps = union_components(a, r);
  std::vector<int> counts(comps.size(), 0);
  const int nv = static_cast<int>(a.vertices().size());
  for (int v = 0; v < nv; ++v) {
    const Region inside = a.vertex_faces(v) & r;
    const int k = inside.size();
    if (k < 1 || k > 2) continue;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (inside.intersects(comps[c])) {
        ++counts[c];
        break;
      }
    }
  }
  return counts;
}

int puncture_count(const Arrangement& a, Region r) {
  check_region(a, r);
  int count = 0;
  const int nv = static_cast<int>(a.vertices().size());
  for (int v = 0; v < nv; ++v) {
    const int k = (a.vertex_faces(v) & r).size();
    if (k >= 1 && k <= 2) ++count;
  }
  return count;
}

std::vector<int> boundary_edges(const Arrangement& a, Region r) {
  check_region(a, r);
  std::vector<int> out;
  const auto& edges = a.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (r.contains(edges[i].left) != r.contains(edges[i].right)) out.push_back(static_cast<int>(i));
  }
  return out;
}

int boundary_b0(const Arrangement& a, Region r) {
  const auto be = boundary_edges(a, r);
  const int nv = static_cast<int>(a.vertices().size());
  DisjointSets ds(nv);
  std::vector<char> touched(nv, 0);
  int components = 0;
  for (int i : be) {
    const Edge& e = a.edges()[i];
    for (int v : {e.v1, e.v2}) {
      if (!touched[v]) {
        touched[v] = 1;
        ++components;
      }
    }
    if (ds.unite(e.v1, e.v2)) --components;
  }
  return components;
}

// ------------------------------------------------------------- describe

ArrangementDescription describe(const Arrangement& a) {
  ArrangementDescription d;
  d.name = a.name();
  d.valid = a.valid();
  d.violations = a.validation().violations;
  const Region internal = a.internal_faces();
  internal.for_each([&](int f) { d.adjacency[a.faces()[f]] = a.labels(a.adjacent_faces(f) & internal); });
  for (std::size_t v = 0; v < a.vertices().size(); ++v) {
    const Vertex& vx = a.vertices()[v];
    ArrangementDescription::VertexRow row{vx.id, {}, {}};
    for (int e : vx.edges) {
      const Edge& edge = a.edges()[e];
      row.edges.push_back(edge.id);
      row.faces.push_back(a.faces()[edge.v1 == static_cast<int>(v) ? edge.left : edge.right]);
    }
    d.vertices.push_back(std::move(row));
  }
  if (d.valid) {
    internal.for_each([&](int f) {
      d.single_punctures.emplace_back(a.faces()[f], puncture_count(a, Region::single(f)));
    });
  }
  return d;
}

nlohmann::json to_json(const ArrangementDescription& d) {
  nlohmann::json j;
  j["name"] = d.name;
  j["valid"] = d.valid;
  j["violations"] = d.violations;
  j["adjacency"] = d.adjacency;
  auto& vs = j["vertices"] = nlohmann::json::array();
  for (const auto& v : d.vertices) vs.push_back({{"id", v.id}, {"faces", v.faces}, {"edges", v.edges}});
  auto& sp = j["single_punctures"] = nlohmann::json::object();
  for (const auto& [f, k] : d.single_punctures) sp[f] = k;
  return j;
}

std::string to_text(const ArrangementDescription& d) {
  std::ostringstream os;
  os << "geometry " << (d.name.empty() ? "<unnamed>" : d.name) << ": " << (d.valid ? "valid" : "INVALID") << '\n';
  for (const auto& v : d.violations) os << "  violation: " << v << '\n';
  os << "adjacency:\n";
  for (const auto& [f, adj] : d.adjacency) os << "  " << f << ": " << join(adj, " ") << '\n';
  os << "vertices (faces counterclockwise):\n";
  for (const auto& v : d.vertices) os << "  v" << v.id << ": (" << join(v.faces, ", ") << ")\n";
  if (!d.single_punctures.empty()) {
    os << "punctures:\n";
    for (const auto& [f, k] : d.single_punctures) os << "  " << f << ": " << k << '\n';
  }
  return os.str();
}

// ----------------------------------------------------------------- JSON

nlohmann::json to_json(const Arrangement& a) {
  nlohmann::json j;
  if (!a.name().empty()) j["name"] = a.name();
  j["faces"] = a.faces();
  auto& es = j["edges"] = nlohmann::json::array();
  for (const auto& e : a.edges()) {
    es.push_back({{"id", e.id},
                  {"v1", a.vertices()[e.v1].id},
                  {"v2", a.vertices()[e.v2].id},
                  {"left", a.faces()[e.left]},
                  {"right", a.faces()[e.right]}});
  }
  auto& vs = j["vertices"] = nlohmann::json::array();
  for (const auto& v : a.vertices()) {
    std::vector<int> ids;
    for (int e : v.edges) ids.push_back(a.edges()[e].id);
    vs.push_back({{"id", v.id}, {"edges", ids}});
  }
  return j;
}

Arrangement arrangement_from_json(const nlohmann::json& j, std::string name) {
  try {
    if (!j.is_object()) throw InputError("arrangement JSON must be an object");
    for (const char* key : {"faces", "edges", "vertices"}) {
      if (!j.contains(key) || !j.at(key).is_array()) {
        throw InputError(std::string("arrangement JSON needs an array \"") + key + "\"");
      }
    }
    if (name.empty() && j.contains("name") && j.at("name").is_string()) name = j.at("name").get<std::string>();
    std::vector<std::string> faces = j.at("faces").get<std::vector<std::string>>();
    if (std::find(faces.begin(), faces.end(), kOuterLabel) == faces.end()) faces.emplace_back(kOuterLabel);
    auto face_of = [&](const std::string& label) {
      const auto it = std::find(faces.begin(), faces.end(), label);
      if (it == faces.end()) throw InputError("unknown face '" + label + "'");
      return static_cast<int>(it - faces.begin());
    };

    std::map<int, int> vertex_index;
    const auto& jv = j.at("vertices");
    for (std::size_t i = 0; i < jv.size(); ++i) {
      const int id = jv[i].at("id").get<int>();
      if (!vertex_index.emplace(id, static_cast<int>(i)).second) {
        throw InputError("duplicate vertex id " + std::to_string(id));
      }
    }
    std::map<int, int> edge_index;
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) {
      Edge e;
      e.id = je.at("id").get<int>();
      if (!edge_index.emplace(e.id, static_cast<int>(edges.size())).second) {
        throw InputError("duplicate edge id " + std::to_string(e.id));
      }
      auto vertex_of = [&](const char* key) {
        const int id = je.at(key).get<int>();
        const auto it = vertex_index.find(id);
        if (it == vertex_index.end()) {
          throw InputError("edge " + std::to_string(e.id) + " references unknown vertex " + std::to_string(id));
        }
        return it->second;
      };
      e.v1 = vertex_of("v1");
      e.v2 = vertex_of("v2");
      e.left = face_of(je.at("left").get<std::string>());
      e.right = face_of(je.at("right").get<std::string>());
      edges.push_back(e);
    }
    std::vector<Vertex> vertices;
    for (const auto& v : jv) {
      Vertex vx{v.at("id").get<int>(), {}};
      for (int id : v.at("edges").get<std::vector<int>>()) {
        const auto it = edge_index.find(id);
        if (it == edge_index.end()) {
          throw InputError("vertex " + std::to_string(vx.id) + " references unknown edge " + std::to_string(id));
        }
        vx.edges.push_back(it->second);
      }
      vertices.push_back(std::move(vx));
    }
    return Arrangement(std::move(faces), std::move(edges), std::move(vertices), std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed arrangement JSON: ") + e.what());
  }
}

}  // namespace teeprobe
