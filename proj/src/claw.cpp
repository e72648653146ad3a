#include "clawpart/claw.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace clawpart {

namespace {

std::vector<std::size_t> indices_by_right(const std::vector<Interval>& iv) {
    std::vector<std::size_t> order(iv.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (iv[a].right != iv[b].right) return iv[a].right < iv[b].right;
        if (iv[a].left != iv[b].left) return iv[a].left < iv[b].left;
        return iv[a].id < iv[b].id;
    });
    return order;
}

// Greedy maximum set of pairwise-disjoint neighbors of a center; scanning in
// right-endpoint order is exact for interval disjointness. Stops after cap
// picks when cap >= 0.
int count_disjoint_neighbors(const std::vector<Interval>& iv,
                             const std::vector<std::size_t>& by_right,
                             std::size_t center, int cap,
                             std::vector<int>* picked) {
    const Interval& c = iv[center];
    Coord frontier = std::numeric_limits<Coord>::min();
    int count = 0;
    for (std::size_t idx : by_right) {
        if (idx == center) continue;
        const Interval& x = iv[idx];
        if (!intersects(x, c)) continue;
        if (x.left < frontier) continue;
        ++count;
        frontier = x.right;
        if (picked) picked->push_back(x.id);
        if (cap >= 0 && count >= cap) break;
    }
    return count;
}

}  // namespace

int claw_number(const IntervalFamily& family) {
    const auto& iv = family.intervals();
    if (iv.size() <= 1) return 0;
    const auto by_right = indices_by_right(iv);
    int best = 0;
    for (std::size_t center = 0; center < iv.size(); ++center) {
        best = std::max(best,
                        count_disjoint_neighbors(iv, by_right, center, -1, nullptr));
    }
    return best;
}

std::optional<ClawWitness> find_claw(const IntervalFamily& family, int v) {
    if (v < 0) throw std::invalid_argument("find_claw: v must be non-negative");
    const auto& iv = family.intervals();
    if (iv.size() <= static_cast<std::size_t>(v)) return std::nullopt;
    const auto by_right = indices_by_right(iv);
    for (std::size_t center = 0; center < iv.size(); ++center) {
        std::vector<int> leaves;
        if (count_disjoint_neighbors(iv, by_right, center, v + 1, &leaves) == v + 1) {
            return ClawWitness{iv[center].id, std::move(leaves)};
        }
    }
    return std::nullopt;
}

int max_disjoint_properly_contained(const Interval& x, const IntervalFamily& family) {
    std::vector<Interval> candidates;
    for (const Interval& y : family) {
        if (y.id == x.id) continue;
        if (properly_contains(x, y)) candidates.push_back(y);
    }
    std::sort(candidates.begin(), candidates.end(), [](const Interval& a, const Interval& b) {
        if (a.right != b.right) return a.right < b.right;
        if (a.left != b.left) return a.left < b.left;
        return a.id < b.id;
    });
    Coord frontier = std::numeric_limits<Coord>::min();
    int count = 0;
    for (const Interval& y : candidates) {
        if (y.left < frontier) continue;
        ++count;
        frontier = y.right;
    }
    return count;
}

}  // namespace clawpart
