#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "convexgrid/lattice_numbers.hpp"

namespace convexgrid {

struct InsufficientPrimitives : std::runtime_error {
  explicit InsufficientPrimitives(const std::string& w) : std::runtime_error(w) {}
};
struct BoxOverflow : std::runtime_error {
  explicit BoxOverflow(const std::string& w) : std::runtime_error(w) {}
};
struct ShearNotLatticeAligned : std::runtime_error {
  explicit ShearNotLatticeAligned(const std::string& w) : std::runtime_error(w) {}
};

/// A row of boxes on the line: box i spans x in [positions[i]*spacing,
/// positions[i]*spacing + width] and y in [0, height], all in subgrid units.
struct BoxSequence {
  std::vector<long long> positions;  // 0 = a_1 < a_2 < ... (strictly increasing)
  long long spacing = 0;             // S
  long long width = 0;               // w (0 = vertical-only boxes)
  long long height = 0;              // h
};

struct ChainPoint {
  long long x = 0;
  long long y = 0;
};

/// Strictly convex chain, one point per box; slopes of consecutive edges
/// strictly increase along the chain.
struct ChainSolution {
  std::vector<ChainPoint> points;
  bool strictly_convex() const;
  std::vector<std::pair<long long, long long>> edge_vectors() const;
};

/// Builds the down-flat-up chain from slope-sorted primitive vectors: the two
/// middle points get y = 0, the ascending half advances by minimal multiples
/// s*q_i landing each x in its box, the descending half is mirrored.
ChainSolution build_chain_primitive(const BoxSequence& boxes, long long k_cap);

/// Largest n for which the greedy point-by-point selection builds a strictly
/// convex n-gon in square cells of side w (height h), boxes spaced S apart.
long long greedy_chain(long long w, long long h, long long S, long long n_boxes);

/// Exact maximum n by dynamic programming over (previous point, current point)
/// states, collapsed to the minimal-last-slope frontier per point.
long long optimal_chain_dp(long long w, long long h, long long S, long long n_boxes);

/// Test oracle: exhaustive search over all point selections (desk scale only).
long long exhaustive_max_ngon(long long w, long long h, long long S, long long n_boxes);

enum class LatticeDirection { horizontal, up_right, up_left };

/// Integer shear mapping a horizontal-chain solution onto a diagonal lattice
/// direction: (x, y) -> (x, y +- (h/w) x). Requires h to be a multiple of w.
ChainSolution shear_chain(const ChainSolution& chain, LatticeDirection direction, long long w,
                          long long h);

}  // namespace convexgrid
