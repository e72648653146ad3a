#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clawpart/interval.hpp"

namespace clawpart {

/// Certificate that a family contains an induced star: the center intersects
/// every leaf and the leaves are pairwise disjoint.
struct ClawWitness {
    int center = 0;
    std::vector<int> leaves;
};

/// Raised when an operation's claw-number precondition fails; carries the
/// offending star.
class claw_bound_error : public std::runtime_error {
public:
    claw_bound_error(const std::string& message, ClawWitness witness)
        : std::runtime_error(message), witness_(std::move(witness)) {}

    const ClawWitness& witness() const { return witness_; }

private:
    ClawWitness witness_;
};

/// Largest v such that the family contains an induced K_{1,v}.
/// Empty and single-vertex families have claw number 0.
int claw_number(const IntervalFamily& family);

/// A witness with v+1 leaves if the claw number exceeds v, else nullopt.
std::optional<ClawWitness> find_claw(const IntervalFamily& family, int v);

/// Maximum number of pairwise-disjoint intervals of the family properly
/// contained in x. If x itself belongs to the family it is not a candidate.
int max_disjoint_properly_contained(const Interval& x, const IntervalFamily& family);

}  // namespace clawpart
