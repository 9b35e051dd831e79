#pragma once

#include <numeric>
#include <queue>
#include <vector>

#include "convexgrid/plane_graph.hpp"

namespace convexgrid::testing {

// Rotation systems for small fixtures. Vertex ids fixed, rotations ccw.

inline PlaneGraph k4() {
  // Outer triangle 0,1,2 (ccw), hub 3 inside.
  return PlaneGraph::build_from_rotation(4,
                                         {
                                             {1, 3, 2},  // 0
                                             {2, 3, 0},  // 1
                                             {0, 3, 1},  // 2
                                             {0, 1, 2},  // 3
                                         },
                                         std::vector<int>{0, 1, 2});
}

inline PlaneGraph triangle() {
  return PlaneGraph::build_from_rotation(3, {{1, 2}, {2, 0}, {0, 1}}, std::vector<int>{0, 1, 2});
}

inline PlaneGraph path3() {
  return PlaneGraph::build_from_rotation(3, {{1}, {0, 2}, {1}});
}

// Triangular prism: outer triangle 0,1,2; inner triangle 3,4,5; spokes i-(i+3).
inline PlaneGraph prism6() {
  return PlaneGraph::build_from_rotation(6,
                                         {
                                             {1, 3, 2},  // 0
                                             {2, 4, 0},  // 1
                                             {0, 5, 1},  // 2
                                             {0, 4, 5},  // 3
                                             {1, 5, 3},  // 4
                                             {2, 3, 4},  // 5
                                         },
                                         std::vector<int>{0, 1, 2});
}

// Cube graph: outer quad 0,1,2,3 (ccw), inner quad 4,5,6,7, spokes i-(i+4).
inline PlaneGraph cube() {
  return PlaneGraph::build_from_rotation(8,
                                         {
                                             {1, 4, 3},  // 0
                                             {2, 5, 0},  // 1
                                             {3, 6, 1},  // 2
                                             {0, 7, 2},  // 3
                                             {0, 5, 7},  // 4
                                             {1, 6, 4},  // 5
                                             {2, 7, 5},  // 6
                                             {3, 4, 6},  // 7
                                         },
                                         std::vector<int>{0, 1, 2, 3});
}

// Max-flow based vertex connectivity >= 3 oracle (vertex splitting, unit
// capacities, Ford-Fulkerson on the split digraph). Independent of
// is_three_connected's pair-removal implementation.
inline bool maxflow_three_connected(const PlaneGraph& g) {
  int n = g.vertex_count();
  if (n < 4) return false;
  auto flow_at_least = [&](int s, int t, int need) {
    // nodes: v_in = 2v, v_out = 2v+1
    int nn = 2 * n;
    std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? need : 1;
    for (int u = 0; u < n; ++u)
      for (int v : g.neighbors(u)) cap[2 * u + 1][2 * v] = need;
    int total = 0;
    while (total < need) {
      std::vector<int> prev(nn, -1);
      std::queue<int> q;
      q.push(2 * s + 1);
      prev[2 * s + 1] = 2 * s + 1;
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y = 0; y < nn; ++y)
          if (cap[x][y] > 0 && prev[y] < 0) {
            prev[y] = x;
            q.push(y);
          }
      }
      if (prev[2 * t] < 0) return false;
      for (int y = 2 * t; y != 2 * s + 1; y = prev[y]) {
        cap[prev[y]][y] -= 1;
        cap[y][prev[y]] += 1;
      }
      ++total;
    }
    return true;
  };
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t) && !flow_at_least(s, t, 3)) return false;
  // adjacent pairs: connectivity bounded by non-adjacent pairs in graphs that
  // are not complete; K_n with n >= 4 is trivially 3-connected
  return true;
}

}  // namespace convexgrid::testing
