#include "convexgrid/plane_graph.hpp"

#include <algorithm>
#include <queue>

namespace convexgrid {

namespace {
inline std::uint64_t key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}
}  // namespace

PlaneGraph PlaneGraph::build_from_rotation(int n, std::vector<std::vector<int>> rotations,
                                           std::optional<std::vector<int>> outer_hint,
                                           std::optional<std::array<int, 3>> corner_hint) {
  if (n <= 0 || static_cast<int>(rotations.size()) != n)
    throw NotSimple("vertex count does not match rotation table");

  PlaneGraph g;
  g.n_ = n;
  g.rot_ = std::move(rotations);
  g.corner_hint_ = corner_hint;

  long long dart_total = 0;
  g.rot_offset_.assign(n + 1, 0);
  g.edge_index_.reserve(2 * static_cast<size_t>(n) * 3);
  for (int u = 0; u < n; ++u) {
    g.rot_offset_[u] = static_cast<int>(dart_total);
    const auto& nb = g.rot_[u];
    for (int i = 0; i < static_cast<int>(nb.size()); ++i) {
      int v = nb[i];
      if (v < 0 || v >= n) throw NotSimple("neighbor id out of range");
      if (v == u) throw NotSimple("loop at vertex " + std::to_string(u));
      if (!g.edge_index_.emplace(key(u, v), i).second)
        throw NotSimple("multi-edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    dart_total += static_cast<long long>(nb.size());
  }
  g.rot_offset_[n] = static_cast<int>(dart_total);
  if (dart_total % 2 != 0) throw AsymmetricAdjacency("odd number of darts");
  g.m_ = static_cast<int>(dart_total / 2);

  for (int u = 0; u < n; ++u)
    for (int v : g.rot_[u])
      if (!g.edge_index_.count(key(v, u)))
        throw AsymmetricAdjacency("edge " + std::to_string(u) + "->" + std::to_string(v) +
                                  " has no reverse");

  // Trace faces: successor of dart u->v is v->w with w the counterclockwise
  // predecessor of u around v. Interior faces come out counterclockwise.
  g.dart_face_.assign(static_cast<size_t>(dart_total), -1);
  for (int u = 0; u < n; ++u) {
    for (int i = 0; i < g.degree(u); ++i) {
      int d0 = g.rot_offset_[u] + i;
      if (g.dart_face_[d0] != -1) continue;
      int fid = static_cast<int>(g.faces_.size());
      Face f;
      int cu = u, ci = i;
      while (true) {
        int d = g.rot_offset_[cu] + ci;
        if (g.dart_face_[d] != -1) break;
        g.dart_face_[d] = fid;
        f.vertices.push_back(cu);
        int cv = g.rot_[cu][ci];
        int j = g.rotation_index(cv, cu);
        int nj = (j - 1 + g.degree(cv)) % g.degree(cv);
        cu = cv;
        ci = nj;
      }
      g.faces_.push_back(std::move(f));
    }
  }

  long long f = static_cast<long long>(g.faces_.size());
  if (n - static_cast<long long>(g.m_) + f != 2)
    throw NonPlanarRotation("Euler check failed: n=" + std::to_string(n) +
                            " m=" + std::to_string(g.m_) + " f=" + std::to_string(f));

  // Resolve outer face: hint cycle if given, else largest face, ties broken by
  // lowest vertex id.
  int outer = -1;
  if (outer_hint && !outer_hint->empty()) {
    for (int fi = 0; fi < g.face_count(); ++fi) {
      const auto& verts = g.faces_[fi].vertices;
      if (verts.size() != outer_hint->size()) continue;
      std::vector<int> a = verts, b = *outer_hint;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a == b) {
        outer = fi;
        break;
      }
    }
    if (outer < 0) throw NonPlanarRotation("outer face hint matches no traced face");
  } else {
    for (int fi = 0; fi < g.face_count(); ++fi) {
      if (outer < 0) {
        outer = fi;
        continue;
      }
      const auto& cand = g.faces_[fi].vertices;
      const auto& best = g.faces_[outer].vertices;
      if (cand.size() > best.size() ||
          (cand.size() == best.size() &&
           *std::min_element(cand.begin(), cand.end()) <
               *std::min_element(best.begin(), best.end())))
        outer = fi;
    }
  }
  g.outer_ = outer;
  g.faces_[outer].is_outer = true;
  return g;
}

int PlaneGraph::max_face_size() const {
  int k = 0;
  for (const auto& f : faces_) k = std::max(k, f.size());
  return k;
}

int PlaneGraph::rotation_index(int u, int v) const {
  auto it = edge_index_.find(key(u, v));
  return it == edge_index_.end() ? -1 : it->second;
}

int PlaneGraph::next_neighbor(int u, int v) const {
  int i = rotation_index(u, v);
  return rot_[u][(i + 1) % degree(u)];
}

int PlaneGraph::prev_neighbor(int u, int v) const {
  int i = rotation_index(u, v);
  return rot_[u][(i - 1 + degree(u)) % degree(u)];
}

int PlaneGraph::face_left_of(int u, int v) const {
  return dart_face_[dart_id(u, v)];
}

int PlaneGraph::dart_id(int u, int v) const {
  return rot_offset_[u] + rotation_index(u, v);
}

namespace {
bool connected_without(const PlaneGraph& g, int skip1, int skip2) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  if (skip1 >= 0) seen[skip1] = 1;
  if (skip2 >= 0) seen[skip2] = 1;
  int start = -1, want = 0;
  for (int v = 0; v < n; ++v)
    if (!seen[v]) {
      if (start < 0) start = v;
      ++want;
    }
  if (want <= 1) return true;
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int got = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++got;
        q.push(v);
      }
  }
  return got == want;
}
}  // namespace

bool is_three_connected(const PlaneGraph& g) {
  int n = g.vertex_count();
  if (n < 4) return false;
  if (!connected_without(g, -1, -1)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!connected_without(g, a, b)) return false;
  return true;
}

}  // namespace convexgrid
