#pragma once

#include <cstdint>
#include <vector>

#include "clawpart/cover.hpp"
#include "clawpart/interval.hpp"
#include "clawpart/partition.hpp"

namespace clawpart {

/// Connected components of the interval graph, computed by a coordinate
/// sweep. Components are listed left to right; members keep family order.
std::vector<std::vector<int>> connected_components(const IntervalFamily& family);

/// Partition into at most k parts of claw number at most v, where k is the
/// smallest integer with theta(family) <= (v+1)^k - 1. Every (s+1)-th
/// sweepline clique (s = (v+1)^(k-1) - 1, covering cliques, 1-based index)
/// goes into one part; the rest splits into components of clique-partition
/// number at most s and recurses with k-1, reusing part indices across
/// components.
Partition partition_by_theta(const IntervalFamily& family, int v);

/// Blocks X_1..X_r, Y_1..Y_r, Z partitioning the family such that
///  1. intervals from different blocks among the X_i and Z do not intersect,
///  2. each Y_i is a clique,
///  3. |Z| <= |X_i| = s < |X_i| + |Y_i|.
struct TwoRPlusOneDecomposition {
    std::vector<std::vector<int>> x_blocks;
    std::vector<std::vector<int>> y_blocks;
    std::vector<int> z_block;
    std::int64_t s = 0;

    std::size_t rounds() const { return x_blocks.size(); }
};

/// Left-to-right peeling: each round cuts at the smallest coordinate b where
/// more than s intervals fit in (a, b), takes s of them as X_i and the
/// leftover intervals crossing b as the clique Y_i. X_i is filled smallest
/// right endpoint first, then smallest id.
TwoRPlusOneDecomposition decompose_2r_plus_1(const IntervalFamily& family, std::int64_t s);

/// Optimal-size partition: exactly kappa_formula(n, v) parts at worst, each
/// of claw number at most v. Recursive split via decompose_2r_plus_1 with
/// s = mu_formula(k-1, v); the X blocks and Z share parts 1..k-1 by disjoint
/// union and the Y cliques together form the last part.
Partition partition_optimal_kappa(const IntervalFamily& family, int v);

/// Partition driven by the input's measured claw number w: one part takes
/// every s-th covering clique (s = 2w, ceil(3w/2) or ceil(w/(v-2)) for
/// v = 1, 2, >= 3), the remaining components are handled by
/// partition_by_theta with one fewer level. At most
/// floor(log_{v+1} ...) + 2 parts per the case bounds; w <= v collapses to
/// a single part.
Partition partition_claw_bounded(const IntervalFamily& family, int v);

/// w parts, each a cluster graph: part h is the union of the sweepline
/// partition cliques with index congruent to h mod w. Requires claw number
/// at most w; otherwise throws claw_bound_error with a witness.
Partition partition_cluster_mod_w(const IntervalFamily& family, int w);

/// Two parts of claw number at most 2 for inputs of claw number at most 3:
/// partition cliques with 1-based index i go left when i mod 4 is 0 or 1,
/// right otherwise. Throws claw_bound_error if the precondition fails.
Partition partition_w3_to_v2(const IntervalFamily& family);

/// Two parts of claw number at most 3 for inputs of claw number at most 5:
/// splits on whether an interval properly contains at least two disjoint
/// intervals of the whole family. Throws claw_bound_error if the
/// precondition fails.
Partition partition_w5_to_v3(const IntervalFamily& family);

}  // namespace clawpart
