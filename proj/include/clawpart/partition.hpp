#pragma once

#include <map>
#include <optional>
#include <vector>

#include "clawpart/claw.hpp"
#include "clawpart/interval.hpp"

namespace clawpart {

/// Assignment of interval ids to 1-based part indices. Part indices are
/// contiguous 1..parts_count with no empty part. v records the claw bound the
/// parts are meant to satisfy.
struct Partition {
    std::map<int, int> assignment;
    int v = 1;
    int parts_count = 0;
};

/// Builds a Partition from a raw assignment, renumbering the used part
/// indices to 1..m in ascending order of the original indices.
Partition make_partition(const std::map<int, int>& raw, int v);

/// Ids of one part, ascending.
std::vector<int> part_ids(const Partition& partition, int part);

/// nullopt if every part induces a subgraph with claw number at most v,
/// otherwise a witness star inside a single part. The partition must cover
/// exactly the family's ids.
std::optional<ClawWitness> verify_partition(const IntervalFamily& family,
                                            const Partition& partition, int v);

}  // namespace clawpart
