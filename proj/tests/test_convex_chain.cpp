#include "convexgrid/convex_chain.hpp"

#include "doctest.h"

using namespace convexgrid;

namespace {

BoxSequence square_boxes(long long k, long long w) {
  BoxSequence b;
  for (long long i = 0; i < k; ++i) b.positions.push_back(i);
  b.spacing = 50 * std::max<long long>(w, 1);
  // Slopes reach t/w with t = max(2, 2K/w), so heights go up to
  // (t/w) * K * S; give the boxes room for that.
  long long t = std::max<long long>(2, w > 0 ? 2 * k / w + 1 : 2 * k);
  b.width = w;
  b.height = (w > 0 ? t * k * b.spacing / w : t * k) + 8;
  return b;
}

void check_in_boxes(const ChainSolution& sol, const BoxSequence& b) {
  REQUIRE(sol.points.size() == b.positions.size());
  for (size_t i = 0; i < sol.points.size(); ++i) {
    long long lo = b.positions[i] * b.spacing;
    CHECK(sol.points[i].x >= lo);
    CHECK(sol.points[i].x <= lo + b.width);
    CHECK(sol.points[i].y >= 0);
    CHECK(sol.points[i].y <= b.height);
  }
}

}  // namespace

TEST_CASE("primitive chain: K=5 w=2 has flat middle at indices 1,2") {
  auto b = square_boxes(5, 2);
  auto sol = build_chain_primitive(b, 16);
  // 1-based M = floor(5/2)+1 = 3: y_2 = y_3 = 0 -> 0-based indices 1 and 2
  CHECK(sol.points[1].y == 0);
  CHECK(sol.points[2].y == 0);
  CHECK(sol.strictly_convex());
  check_in_boxes(sol, b);
}

TEST_CASE("primitive chain: K=2 gives two flat points") {
  auto b = square_boxes(2, 3);
  auto sol = build_chain_primitive(b, 8);
  CHECK(sol.points[0].y == 0);
  CHECK(sol.points[1].y == 0);
  CHECK(sol.strictly_convex());
}

TEST_CASE("primitive chain: K=8 w=4 with unit gaps") {
  auto b = square_boxes(8, 4);
  auto sol = build_chain_primitive(b, 64);
  CHECK(sol.strictly_convex());
  check_in_boxes(sol, b);
  // height usage stays within (t/w) * x-extent
  long long t = std::max<long long>(2, 2 * 8 / 4);
  long long extent = sol.points.back().x - sol.points.front().x;
  for (const auto& p : sol.points) CHECK(p.y * 4 <= t * extent);
  // all edge directions pairwise distinct
  auto edges = sol.edge_vectors();
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j) {
      __int128 c = static_cast<__int128>(edges[i].first) * edges[j].second -
                   static_cast<__int128>(edges[i].second) * edges[j].first;
      CHECK(c != 0);
    }
}

TEST_CASE("primitive chain with sparse positions") {
  BoxSequence b;
  b.positions = {0, 3, 4, 9, 13, 14};
  b.spacing = 150;
  b.width = 3;
  b.height = 50000;
  auto sol = build_chain_primitive(b, 32);
  CHECK(sol.strictly_convex());
  check_in_boxes(sol, b);
}

TEST_CASE("primitive chain in vertical-only boxes (w=0)") {
  BoxSequence b;
  b.positions = {0, 1, 2, 5, 6, 7};
  b.spacing = 1;
  b.width = 0;
  b.height = 100;
  auto sol = build_chain_primitive(b, 32);
  CHECK(sol.strictly_convex());
  for (size_t i = 0; i < sol.points.size(); ++i) CHECK(sol.points[i].x == b.positions[i]);
}

TEST_CASE("chain height budget: BoxOverflow if h too small") {
  BoxSequence b = square_boxes(9, 2);
  b.height = 1;
  CHECK_THROWS_AS(build_chain_primitive(b, 32), BoxOverflow);
}

TEST_CASE("greedy chain: frozen values of the documented rule") {
  // Start at the lowest-left point of the middle box, minimal strictly larger
  // slope each step. Matches the published experiment on all rows except
  // w = 4 and w = 12, where this rule finds one extra step pair.
  CHECK(greedy_chain(0, 0, 1, 1000000) == 2);
  CHECK(greedy_chain(1, 1, 50, 1000000) == 4);
  CHECK(greedy_chain(2, 2, 100, 1000000) == 6);
  CHECK(greedy_chain(4, 4, 200, 1000000) == 10);
  CHECK(greedy_chain(6, 6, 300, 1000000) == 12);
  CHECK(greedy_chain(8, 8, 400, 1000000) == 14);
  CHECK(greedy_chain(10, 10, 500, 1000000) == 18);
  CHECK(greedy_chain(12, 12, 600, 1000000) == 20);
  CHECK(greedy_chain(20, 20, 1000, 1000000) == 28);
  CHECK(greedy_chain(40, 40, 2000, 1000000) == 48);
}

TEST_CASE("optimal DP reproduces the experiment column for small w") {
  CHECK(optimal_chain_dp(0, 0, 1, 1000000) == 2);
  CHECK(optimal_chain_dp(1, 1, 50, 1000000) == 4);
  CHECK(optimal_chain_dp(2, 2, 100, 1000000) == 6);
  CHECK(optimal_chain_dp(4, 4, 200, 1000000) == 10);
  CHECK(optimal_chain_dp(6, 6, 300, 1000000) == 14);
  CHECK(optimal_chain_dp(8, 8, 400, 1000000) == 16);
}

TEST_CASE("optimal >= greedy") {
  for (long long w : {1, 2, 4, 6, 8, 10}) {
    long long S = 50 * w;
    CHECK(optimal_chain_dp(w, w, S, 1000000) >= greedy_chain(w, w, S, 1000000));
  }
}

TEST_CASE("height lower bound (w+1)/n >= 1/2") {
  for (long long w : {0, 1, 2, 4, 6, 8, 10, 12}) {
    long long S = std::max<long long>(50 * w, 1);
    long long n = optimal_chain_dp(w, w, S, 1000000);
    CHECK(2 * (w + 1) >= n);
  }
}

TEST_CASE("small-instance DP equals exhaustive search") {
  for (long long w = 0; w <= 4; ++w) {
    long long S = std::max<long long>(50 * w, 2);
    for (long long boxes = 2; boxes <= 10; ++boxes) {
      CAPTURE(w);
      CAPTURE(boxes);
      CHECK(optimal_chain_dp(w, w, S, boxes) == exhaustive_max_ngon(w, w, S, boxes));
    }
  }
}

TEST_CASE("shear keeps chains strictly convex and is identity for horizontal") {
  auto b = square_boxes(6, 2);
  auto sol = build_chain_primitive(b, 16);
  auto same = shear_chain(sol, LatticeDirection::horizontal, 2, 6);
  CHECK(same.points[3].x == sol.points[3].x);
  CHECK(same.points[3].y == sol.points[3].y);
  auto up = shear_chain(sol, LatticeDirection::up_right, 2, 6);
  auto dn = shear_chain(sol, LatticeDirection::up_left, 2, 6);
  for (size_t i = 2; i < up.points.size(); ++i) {
    auto turn = [&](const ChainSolution& s) {
      long long ax = s.points[i - 1].x - s.points[i - 2].x;
      long long ay = s.points[i - 1].y - s.points[i - 2].y;
      long long bx = s.points[i].x - s.points[i - 1].x;
      long long by = s.points[i].y - s.points[i - 1].y;
      return static_cast<__int128>(ax) * by - static_cast<__int128>(ay) * bx;
    };
    CHECK(turn(up) > 0);
    CHECK(turn(dn) > 0);
  }
  CHECK_THROWS_AS(shear_chain(sol, LatticeDirection::up_right, 2, 7), ShearNotLatticeAligned);
}
