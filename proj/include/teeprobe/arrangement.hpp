#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "teeprobe/index_set.hpp"

namespace teeprobe {

struct FaceTag;
/// Set of face indices of an arrangement. Regions used in queries never
/// contain the outer face.
using Region = IndexSet<FaceTag>;

/// Oriented edge v1 -> v2 with the face on each side.
struct Edge {
  int id = 0;
  int v1 = 0;  // vertex index
  int v2 = 0;
  int left = 0;  // face index
  int right = 0;
};

struct Vertex {
  int id = 0;
  std::vector<int> edges;  // edge indices, counterclockwise
};

struct ValidationReport {
  bool valid() const { return violations.empty(); }
  std::vector<std::string> violations;
};

/// Combinatorial map of a disk partition, closed into a sphere by the outer
/// region "O": faces are regions, vertices are the points where boundaries
/// meet. A valid arrangement is trivalent and planar with disk faces.
class Arrangement {
 public:
  Arrangement() = default;
  /// `faces` must contain "O". Dangling references throw InputError; every
  /// other defect is recorded in validation().
  Arrangement(std::vector<std::string> faces, std::vector<Edge> edges, std::vector<Vertex> vertices,
              std::string name = {});

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& faces() const noexcept { return faces_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int outer_face() const noexcept { return outer_; }

  /// Face index for a label, or -1.
  int face_index(std::string_view label) const;
  /// Internal faces, i.e. everything but O.
  Region internal_faces() const;
  /// Throws InputError for unknown labels or "O".
  Region region(std::span<const std::string> labels) const;
  std::vector<std::string> labels(Region r) const;

  /// All faces around the vertex (outer face included).
  Region vertex_faces(int vertex) const { return vertex_faces_.at(vertex); }
  /// Faces sharing at least one edge with `face`.
  Region adjacent_faces(int face) const { return adjacency_.at(face); }

  const ValidationReport& validation() const noexcept { return report_; }
  bool valid() const noexcept { return report_.valid(); }
  /// Throws InputError listing the violations if the arrangement is invalid.
  void require_valid() const;

  /// Same incidence structure with internal faces renamed old -> new.
  Arrangement relabeled(const std::map<std::string, std::string>& mapping) const;

 private:
  void derive();
  void validate_structure();

  std::string name_;
  std::vector<std::string> faces_;
  std::vector<Edge> edges_;
  std::vector<Vertex> vertices_;
  int outer_ = -1;
  std::vector<Region> vertex_faces_;
  std::vector<Region> adjacency_;
  ValidationReport report_;
};

/// Builds arrangements from per-vertex counterclockwise face triples; edge
/// orientation and vertex rotations are derived from them.
class ArrangementBuilder {
 public:
  /// Internal face labels; "O" is appended as the outer face.
  explicit ArrangementBuilder(std::vector<std::string> internal_faces);

  int face(std::string_view label) const;
  int outer() const noexcept { return static_cast<int>(faces_.size()) - 1; }
  int add_vertex(std::array<int, 3> ccw_faces);
  /// Edge between vertices a and b separating faces f and g.
  void add_edge(int a, int b, int f, int g);
  Arrangement build(std::string name) const;

 private:
  struct PendingEdge {
    int a, b, f, g;
  };
  std::vector<std::string> faces_;
  std::vector<std::array<int, 3>> corners_;
  std::vector<PendingEdge> edges_;
};

/// Sectors 0..n-1 around a disk (counterclockwise) whose central point is
/// resolved into trivalent points, one per triangle (i<j<k) of a
/// triangulation of the n-gon of sectors.
Arrangement make_pie(const std::vector<std::string>& labels, const std::vector<std::array<int, 3>>& triangles,
                     std::string name = {});

/// n sectors; the last sector spreads to the centre, giving inner points
/// (A_i, A_{i+1}, A_n) for i = 1..n-2 and outer points (A_i, A_{i+1}, O).
Arrangement make_resolved_pie(int n);

/// The three-sector disk (identical to make_resolved_pie(3)).
Arrangement make_kp_disk3();

/// n parallel bands; each internal boundary meets the outer circle twice.
Arrangement make_strips(int n);

/// kp_disk3, pie<n>, resolved_pie<n>, resolved_pie(n), strips<n>, strips(n).
Arrangement builtin_arrangement(std::string_view name);

/// Path to an arrangement JSON file, or a builtin name.
Arrangement resolve_arrangement(std::string_view ref);

// Counting primitives.

/// Connected components of r under shared-edge adjacency, ordered by their
/// lowest face index.
std::vector<Region> union_components(const Arrangement& a, Region r);

/// A vertex is a puncture of r when 1 or 2 of its faces lie in r. Returns
/// one count per component of r.
std::vector<int> boundary_punctures(const Arrangement& a, Region r);

/// Total puncture count of r (components merged).
int puncture_count(const Arrangement& a, Region r);

/// Number of connected components of the boundary of r.
int boundary_b0(const Arrangement& a, Region r);

/// Edges with exactly one side in r.
std::vector<int> boundary_edges(const Arrangement& a, Region r);

struct ArrangementDescription {
  std::string name;
  bool valid = false;
  std::vector<std::string> violations;
  std::map<std::string, std::vector<std::string>> adjacency;  // internal faces only
  struct VertexRow {
    int id;
    std::vector<std::string> faces;
    std::vector<int> edges;
  };
  std::vector<VertexRow> vertices;
  std::vector<std::pair<std::string, int>> single_punctures;
};

ArrangementDescription describe(const Arrangement& a);
nlohmann::json to_json(const ArrangementDescription& d);
std::string to_text(const ArrangementDescription& d);

/// {"faces":[...], "edges":[{"id","v1","v2","left","right"}], "vertices":[{"id","edges"}]}
nlohmann::json to_json(const Arrangement& a);
/// An empty `name` falls back to the "name" field of the JSON.
Arrangement arrangement_from_json(const nlohmann::json& j, std::string name = {});

}  // namespace teeprobe
