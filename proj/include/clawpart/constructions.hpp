#pragma once

#include <cstdint>

#include "clawpart/interval.hpp"
#include "clawpart/partition.hpp"

namespace clawpart {

/// Recursive extremal family: a spanning interval over v+1 abutting copies of
/// the (k-1)-level family. Unit width at the bottom, so the whole construction
/// occupies (0, (v+1)^(k-1)). Ids are assigned root-first, copies left to
/// right. Has ((v+1)^k - 1)/v intervals.
IntervalFamily build_A(int k, int v);

/// The 12 intervals of lengths 1, 2 and 3 with integer endpoints in [0, 5].
/// Claw number 3; splits into three cluster graphs but not into two.
IntervalFamily build_J3();

/// All intervals of integer lengths 2..7 with endpoints in [0, 21]
/// (105 intervals). Claw number 4; no 2-partition into parts of claw
/// number at most 2.
IntervalFamily build_J4();

/// All intervals of lengths 1, 3 and 5 with endpoints in [0, 79]
/// (231 intervals). Claw number 5; splits by length into three parts of claw
/// number at most 2, but admits no such 2-partition.
IntervalFamily build_J5();

/// 24 intervals: 13 units covering (0, 13), one length-3 interval in the
/// middle, the two length-5 intervals hugging the ends, and all 8 length-6
/// intervals. Claw number 6; splits by length groups {1}, {3}, {5,6} into
/// three parts of claw number at most 2, but admits no such 2-partition.
IntervalFamily build_J6();

struct GardiFixture {
    IntervalFamily family;
    /// The misgrouped 2-partition {3,4,7,8} / {1,2,5,6,9}; part 2 contains an
    /// induced K_{1,3} with center 5 and leaves 1, 6, 9.
    Partition partition;
};

/// Nine intervals whose sweepline cover has cliques {1,2}, {3}, {4}, {5,6},
/// {7}, {8}, {9}, together with the 2-partition that groups cliques by index
/// mod 3 and fails to be claw-2-free.
GardiFixture build_gardi_fixture();

/// n intervals with endpoints drawn uniformly from {0, ..., coord_range},
/// redrawing any pair with left >= right. Uses mt19937_64 seeded as given
/// with plain modulo reduction, so output is identical across platforms.
IntervalFamily build_random(std::size_t n, Coord coord_range, std::uint64_t seed);

/// Removes claw centers until the claw number is at most w. Deterministic.
IntervalFamily trim_to_claw(IntervalFamily family, int w);

}  // namespace clawpart
