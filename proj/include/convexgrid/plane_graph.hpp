#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace convexgrid {

struct NonPlanarRotation : std::runtime_error {
  explicit NonPlanarRotation(const std::string& what) : std::runtime_error(what) {}
};
struct NotSimple : std::runtime_error {
  explicit NotSimple(const std::string& what) : std::runtime_error(what) {}
};
struct AsymmetricAdjacency : std::runtime_error {
  explicit AsymmetricAdjacency(const std::string& what) : std::runtime_error(what) {}
};

/// One face of an embedded plane graph. Interior faces are stored in
/// counterclockwise trace order, the outer face in clockwise order.
struct Face {
  std::vector<int> vertices;
  bool is_outer = false;
  int size() const { return static_cast<int>(vertices.size()); }
};

/// Combinatorial plane graph given as a rotation system: for every vertex the
/// counterclockwise cyclic order of its neighbors. Immutable after
/// build_from_rotation; all queries are const and safe to share across threads.
class PlaneGraph {
 public:
  static PlaneGraph build_from_rotation(
      int n, std::vector<std::vector<int>> rotations,
      std::optional<std::vector<int>> outer_hint = std::nullopt,
      std::optional<std::array<int, 3>> corner_hint = std::nullopt);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int interior_face_count() const { return face_count() - 1; }

  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  const std::vector<int>& neighbors(int v) const { return rot_[v]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_[f]; }
  int outer_face() const { return outer_; }
  int max_face_size() const;

  /// Position of v in the rotation of u; -1 if (u,v) is not an edge.
  int rotation_index(int u, int v) const;
  bool has_edge(int u, int v) const { return rotation_index(u, v) >= 0; }
  /// Counterclockwise successor / predecessor of v around u.
  int next_neighbor(int u, int v) const;
  int prev_neighbor(int u, int v) const;

  /// Face lying to the left of the directed edge u->v.
  int face_left_of(int u, int v) const;

  /// Dart id of the directed edge u->v (darts are numbered per-vertex in
  /// rotation order); 2m darts total.
  int dart_id(int u, int v) const;
  int dart_count() const { return 2 * m_; }

  std::optional<std::array<int, 3>> corner_hint() const { return corner_hint_; }

 private:
  PlaneGraph() = default;

  int n_ = 0;
  int m_ = 0;
  int outer_ = -1;
  std::vector<std::vector<int>> rot_;
  std::vector<int> rot_offset_;
  std::vector<int> dart_face_;
  std::unordered_map<std::uint64_t, int> edge_index_;  // (u,v) -> index of v in rot_[u]
  std::vector<Face> faces_;
  std::optional<std::array<int, 3>> corner_hint_;
};

/// Brute-force 3-connectivity: connected and no vertex or vertex pair
/// disconnects the graph. Requires n >= 4 by convention.
bool is_three_connected(const PlaneGraph& g);

}  // namespace convexgrid
