#include "clawpart/partition_engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "clawpart/claw.hpp"
#include "clawpart/formulas.hpp"

namespace clawpart {

namespace {

// Smallest k >= 1 with value <= (v+1)^k - 1.
int level_for(std::int64_t value, int v) {
    int k = 1;
    __int128 power = v + 1;
    while (power - 1 < value) {
        power *= v + 1;
        ++k;
    }
    return k;
}

// Smallest k >= 1 with s <= (v+1)^(k-1).
int level_for_mod(std::int64_t s, int v) {
    int k = 1;
    __int128 power = 1;
    while (power < s) {
        power *= v + 1;
        ++k;
    }
    return k;
}

void merge_assignment(std::map<int, int>& into, const std::map<int, int>& from) {
    for (const auto& [id, part] : from) {
        if (!into.emplace(id, part).second) {
            throw std::logic_error("partition engine assigned id " + std::to_string(id) +
                                   " twice");
        }
    }
}

int max_part(const std::map<int, int>& assignment) {
    int m = 0;
    for (const auto& [id, part] : assignment) {
        (void)id;
        m = std::max(m, part);
    }
    return m;
}

// Ids of the union of the covering cliques whose 1-based index is divisible
// by step.
std::vector<int> selected_clique_union(const CliqueCover& cover, std::int64_t step) {
    std::unordered_set<int> seen;
    std::vector<int> ids;
    for (std::size_t i = step; i <= cover.size(); i += step) {
        for (int id : cover.greedy_cliques[i - 1]) {
            if (seen.insert(id).second) ids.push_back(id);
        }
    }
    return ids;
}

// The claw bound on the selected-clique part is what the construction's
// correctness rests on; re-verify instead of trusting it silently.
void require_claw_at_most(const IntervalFamily& part, int v, const char* where) {
    if (find_claw(part, v)) {
        throw std::logic_error(std::string(where) +
                               ": selected clique union exceeded claw bound " +
                               std::to_string(v));
    }
}

std::map<int, int> theta_partition_assignment(const IntervalFamily& family, int v);

// Recursion body shared by partition_by_theta and partition_claw_bounded:
// splits off the selected cliques as one part and recurses per component.
std::map<int, int> split_on_selected_cliques(const IntervalFamily& family, int v,
                                             const CliqueCover& cover, std::int64_t step,
                                             int level, const char* where) {
    std::vector<int> selected = selected_clique_union(cover, step);
    IntervalFamily selected_family = family.induced(selected);
    require_claw_at_most(selected_family, v, where);

    std::unordered_set<int> in_selected(selected.begin(), selected.end());
    std::vector<int> rest;
    for (const Interval& iv : family) {
        if (!in_selected.count(iv.id)) rest.push_back(iv.id);
    }
    IntervalFamily rest_family = family.induced(rest);

    std::map<int, int> assignment;
    for (const auto& component : connected_components(rest_family)) {
        std::map<int, int> sub = theta_partition_assignment(family.induced(component), v);
        if (max_part(sub) > level - 1) {
            throw std::logic_error(std::string(where) +
                                   ": component needed more than k-1 parts");
        }
        merge_assignment(assignment, sub);
    }
    for (int id : selected) assignment[id] = level;
    return assignment;
}

std::map<int, int> theta_partition_assignment(const IntervalFamily& family, int v) {
    std::map<int, int> assignment;
    if (family.empty()) return assignment;
    const CliqueCover cover = sweepline_cover(family);
    const auto j = static_cast<std::int64_t>(cover.size());
    if (j <= v) {
        for (const Interval& iv : family) assignment[iv.id] = 1;
        return assignment;
    }
    const int k = level_for(j, v);
    __int128 s = 1;
    for (int i = 1; i < k; ++i) s *= v + 1;
    s -= 1;  // (v+1)^(k-1) - 1
    return split_on_selected_cliques(family, v, cover, static_cast<std::int64_t>(s) + 1,
                                     k, "partition_by_theta");
}

}  // namespace

std::vector<std::vector<int>> connected_components(const IntervalFamily& family) {
    const auto& iv = family.intervals();
    std::vector<std::size_t> order(iv.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (iv[a].left != iv[b].left) return iv[a].left < iv[b].left;
        if (iv[a].right != iv[b].right) return iv[a].right < iv[b].right;
        return iv[a].id < iv[b].id;
    });
    std::vector<std::vector<int>> components;
    Coord reach = std::numeric_limits<Coord>::min();
    for (std::size_t idx : order) {
        // Open intervals: touching endpoints do not connect.
        if (components.empty() || iv[idx].left >= reach) {
            components.emplace_back();
            reach = iv[idx].right;
        } else {
            reach = std::max(reach, iv[idx].right);
        }
        components.back().push_back(iv[idx].id);
    }
    // Members in family order, not sweep order.
    for (auto& component : components) {
        std::unordered_set<int> members(component.begin(), component.end());
        component.clear();
        for (const Interval& x : family) {
            if (members.count(x.id)) component.push_back(x.id);
        }
    }
    return components;
}

Partition partition_by_theta(const IntervalFamily& family, int v) {
    if (v < 1) throw std::invalid_argument("partition_by_theta: v must be positive");
    return make_partition(theta_partition_assignment(family, v), v);
}

TwoRPlusOneDecomposition decompose_2r_plus_1(const IntervalFamily& family, std::int64_t s) {
    if (s < 1) throw std::invalid_argument("decompose_2r_plus_1: s must be positive");
    TwoRPlusOneDecomposition result;
    result.s = s;

    // Current pool sorted by right endpoint, then id; a is fixed at the
    // leftmost endpoint so containment in (a, b) only constrains the right
    // endpoints of what is left.
    std::vector<Interval> pool(family.begin(), family.end());
    std::sort(pool.begin(), pool.end(), [](const Interval& a, const Interval& b) {
        if (a.right != b.right) return a.right < b.right;
        return a.id < b.id;
    });

    while (static_cast<std::int64_t>(pool.size()) > s) {
        const Coord b = pool[s].right;  // smallest b with |Z(a,b)| > s
        std::vector<int> x_block;
        std::vector<int> y_block;
        std::vector<Interval> remainder;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (i < static_cast<std::size_t>(s)) {
                x_block.push_back(pool[i].id);
            } else if (pool[i].left < b) {
                y_block.push_back(pool[i].id);
            } else {
                remainder.push_back(pool[i]);
            }
        }
        result.x_blocks.push_back(std::move(x_block));
        result.y_blocks.push_back(std::move(y_block));
        pool = std::move(remainder);
    }
    for (const Interval& iv : pool) result.z_block.push_back(iv.id);
    return result;
}

Partition partition_optimal_kappa(const IntervalFamily& family, int v) {
    if (v < 1) throw std::invalid_argument("partition_optimal_kappa: v must be positive");

    // Recursive split; returns parts 1..kappa_formula(|sub|, v).
    auto go = [v](auto&& self, const IntervalFamily& sub) -> std::map<int, int> {
        std::map<int, int> assignment;
        const auto n = static_cast<std::int64_t>(sub.size());
        if (n == 0) return assignment;
        if (n <= v + 1) {
            for (const Interval& iv : sub) assignment[iv.id] = 1;
            return assignment;
        }
        const int k = kappa_formula(n, v);
        const std::int64_t s = mu_formula(k - 1, v);
        TwoRPlusOneDecomposition d = decompose_2r_plus_1(sub, s);
        const auto r = static_cast<int>(d.rounds());
        if (r < 1 || r > v + 1) {
            throw std::logic_error("partition_optimal_kappa: round count " +
                                   std::to_string(r) + " out of range");
        }
        if (r == v + 1) {
            // Tight case: the y blocks must be singletons and z empty.
            if (!d.z_block.empty() ||
                std::any_of(d.y_blocks.begin(), d.y_blocks.end(),
                            [](const auto& y) { return y.size() != 1; })) {
                throw std::logic_error(
                    "partition_optimal_kappa: tight decomposition shape violated");
            }
        }
        for (const auto& x_block : d.x_blocks) {
            merge_assignment(assignment, self(self, sub.induced(x_block)));
        }
        if (!d.z_block.empty()) {
            merge_assignment(assignment, self(self, sub.induced(d.z_block)));
        }
        if (max_part(assignment) > k - 1) {
            throw std::logic_error("partition_optimal_kappa: recursion exceeded k-1 parts");
        }
        for (const auto& y_block : d.y_blocks) {
            for (int id : y_block) assignment[id] = k;
        }
        return assignment;
    };

    return make_partition(go(go, family), v);
}

Partition partition_claw_bounded(const IntervalFamily& family, int v) {
    if (v < 1) throw std::invalid_argument("partition_claw_bounded: v must be positive");
    const int w = claw_number(family);
    if (w <= v) {
        std::map<int, int> assignment;
        for (const Interval& iv : family) assignment[iv.id] = 1;
        return make_partition(assignment, v);
    }
    std::int64_t s;
    if (v == 1) {
        s = 2 * static_cast<std::int64_t>(w);
    } else if (v == 2) {
        s = (3 * static_cast<std::int64_t>(w) + 1) / 2;
    } else {
        s = (static_cast<std::int64_t>(w) + v - 3) / (v - 2);
    }
    const int k = level_for_mod(s, v);
    const CliqueCover cover = sweepline_cover(family);
    return make_partition(
        split_on_selected_cliques(family, v, cover, s, k, "partition_claw_bounded"), v);
}

Partition partition_cluster_mod_w(const IntervalFamily& family, int w) {
    if (w < 1) throw std::invalid_argument("partition_cluster_mod_w: w must be positive");
    if (auto witness = find_claw(family, w)) {
        throw claw_bound_error("partition_cluster_mod_w: claw number exceeds " +
                                   std::to_string(w),
                               *witness);
    }
    const CliqueCover cover = sweepline_cover(family);
    std::map<int, int> assignment;
    for (std::size_t i = 1; i <= cover.size(); ++i) {
        const int part = static_cast<int>((i - 1) % w) + 1;
        for (int id : cover.cliques[i - 1]) assignment[id] = part;
    }
    return make_partition(assignment, 1);
}

Partition partition_w3_to_v2(const IntervalFamily& family) {
    if (auto witness = find_claw(family, 3)) {
        throw claw_bound_error("partition_w3_to_v2: claw number exceeds 3", *witness);
    }
    const CliqueCover cover = sweepline_cover(family);
    std::map<int, int> assignment;
    for (std::size_t i = 1; i <= cover.size(); ++i) {
        const int part = (i % 4 <= 1) ? 1 : 2;
        for (int id : cover.cliques[i - 1]) assignment[id] = part;
    }
    return make_partition(assignment, 2);
}

Partition partition_w5_to_v3(const IntervalFamily& family) {
    if (auto witness = find_claw(family, 5)) {
        throw claw_bound_error("partition_w5_to_v3: claw number exceeds 5", *witness);
    }
    std::map<int, int> assignment;
    for (const Interval& iv : family) {
        // Containment is counted against the whole family, not the part.
        assignment[iv.id] = max_disjoint_properly_contained(iv, family) < 2 ? 1 : 2;
    }
    return make_partition(assignment, 3);
}

}  // namespace clawpart
