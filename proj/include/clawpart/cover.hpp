#pragma once

#include <vector>

#include "clawpart/interval.hpp"

namespace clawpart {

/// Output of the sweepline: j stabbers T_i forming a maximum independent set,
/// their stab points r_i, the partition cliques I'_i (intervals removed in
/// round i), and the covering cliques I_i (every interval of the family that
/// contains the stab unit S_i = (r_i - 1, r_i), removed or not).
///
/// Invariants: stabbers are pairwise disjoint; stab points strictly increase;
/// cliques partition the family's ids; T_i is in I'_i, and I'_i is a subset
/// of I_i.
struct CliqueCover {
    std::vector<int> stabbers;
    std::vector<Coord> stab_points;
    std::vector<std::vector<int>> cliques;
    std::vector<std::vector<int>> greedy_cliques;

    std::size_t size() const { return stabbers.size(); }
};

/// Sweepline over the family: each round picks the remaining interval with
/// minimum right endpoint (ties: larger left endpoint, then smaller id) as
/// stabber T_i and removes all remaining intervals containing the stab unit
/// S_i. The number of rounds equals both the independence number and the
/// vertex-clique-partition number of the interval graph.
CliqueCover sweepline_cover(const IntervalFamily& family);

/// Vertex-clique-partition number (= independence number on interval graphs).
int theta(const IntervalFamily& family);

}  // namespace clawpart
