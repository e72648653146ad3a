#pragma once

#include <cstdint>

namespace clawpart {

/// Largest n such that every n-vertex interval graph splits into k induced
/// subgraphs of claw number at most v: ((v+1)^(k+1) - (v+1)) / v.
/// Throws std::range_error if the value does not fit in 64 bits.
std::int64_t mu_formula(int k, int v);

/// Smallest k such that every n-vertex interval graph splits into k induced
/// subgraphs of claw number at most v: floor(log_{v+1}(n*v + 1)), evaluated
/// with exact integer arithmetic.
int kappa_formula(std::int64_t n, int v);

struct KappaHatBounds {
    int lower = 0;
    int upper = 0;
};

/// Bounds on the minimum part count for inputs of claw number w and target
/// claw bound v. Exact for w == v and for the handful of small (w, v) pairs
/// with known exact values; otherwise the general logarithmic bounds,
/// per-case on v. Requires w >= v >= 1.
KappaHatBounds kappa_hat_bounds(std::int64_t w, int v);

}  // namespace clawpart
