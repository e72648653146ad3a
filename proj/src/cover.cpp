#include "clawpart/cover.hpp"

#include <algorithm>
#include <numeric>

namespace clawpart {

CliqueCover sweepline_cover(const IntervalFamily& family) {
    CliqueCover cover;
    const auto& iv = family.intervals();
    const std::size_t n = iv.size();
    if (n == 0) return cover;

    // Stabber candidates: right ascending, ties by larger left, then smaller id.
    std::vector<std::size_t> by_right(n);
    std::iota(by_right.begin(), by_right.end(), std::size_t{0});
    std::sort(by_right.begin(), by_right.end(), [&](std::size_t a, std::size_t b) {
        if (iv[a].right != iv[b].right) return iv[a].right < iv[b].right;
        if (iv[a].left != iv[b].left) return iv[a].left > iv[b].left;
        return iv[a].id < iv[b].id;
    });

    // Activation order for clique extraction.
    std::vector<std::size_t> by_left(n);
    std::iota(by_left.begin(), by_left.end(), std::size_t{0});
    std::sort(by_left.begin(), by_left.end(), [&](std::size_t a, std::size_t b) {
        if (iv[a].left != iv[b].left) return iv[a].left < iv[b].left;
        if (iv[a].right != iv[b].right) return iv[a].right < iv[b].right;
        return iv[a].id < iv[b].id;
    });

    // A remaining interval has right >= r_i, so it contains S_i = (r_i-1, r_i)
    // exactly when its left endpoint is < r_i. Every interval with left < r_i
    // that is still remaining gets removed in round i, which lets a single
    // monotone pointer over by_left extract each round's clique.
    std::vector<char> swept(n, 0);
    std::size_t next_stab = 0;
    std::size_t activate = 0;
    while (true) {
        while (next_stab < n && swept[by_right[next_stab]]) ++next_stab;
        if (next_stab == n) break;
        const std::size_t t = by_right[next_stab];
        const Coord r = iv[t].right;
        cover.stabbers.push_back(iv[t].id);
        cover.stab_points.push_back(r);
        std::vector<int> clique;
        while (activate < n && iv[by_left[activate]].left < r) {
            const std::size_t x = by_left[activate];
            clique.push_back(iv[x].id);
            swept[x] = 1;
            ++activate;
        }
        cover.cliques.push_back(std::move(clique));
    }

    // Covering cliques: interval x contains S_i iff x.left < r_i <= x.right;
    // since stab points increase, the rounds form a contiguous range.
    const auto& r = cover.stab_points;
    cover.greedy_cliques.assign(cover.size(), {});
    for (std::size_t x = 0; x < n; ++x) {
        auto lo = std::upper_bound(r.begin(), r.end(), iv[x].left) - r.begin();
        auto hi = std::upper_bound(r.begin(), r.end(), iv[x].right) - r.begin();
        for (auto i = lo; i < hi; ++i) cover.greedy_cliques[i].push_back(iv[x].id);
    }
    return cover;
}

int theta(const IntervalFamily& family) {
    return static_cast<int>(sweepline_cover(family).size());
}

}  // namespace clawpart
