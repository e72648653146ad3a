#include "clawpart/constructions.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include "clawpart/claw.hpp"

namespace clawpart {

namespace {

void emit_A(IntervalFamily& family, int k, int v, Coord offset, Coord width, int& next_id) {
    if (k == 1) {
        family.add(next_id++, offset, offset + 1);
        return;
    }
    family.add(next_id++, offset, offset + width);
    const Coord sub = width / (v + 1);
    for (int copy = 0; copy <= v; ++copy) {
        emit_A(family, k - 1, v, offset + copy * sub, sub, next_id);
    }
}

// All intervals of the given length with integer endpoints in [0, span].
void emit_length_run(IntervalFamily& family, Coord length, Coord span, int& next_id) {
    for (Coord left = 0; left + length <= span; ++left) {
        family.add(next_id++, left, left + length);
    }
}

}  // namespace

IntervalFamily build_A(int k, int v) {
    if (k < 1 || v < 1) throw std::invalid_argument("build_A: requires k >= 1, v >= 1");
    // width (v+1)^(k-1) and ((v+1)^k - 1)/v vertices; guard both.
    __int128 width = 1;
    __int128 count = 1;
    for (int i = 1; i < k; ++i) {
        width *= v + 1;
        count = count * (v + 1) + 1;
        if (count > 100'000'000) {
            throw std::range_error("build_A(" + std::to_string(k) + ", " +
                                   std::to_string(v) + ") is too large");
        }
    }
    IntervalFamily family;
    int next_id = 0;
    emit_A(family, k, v, 0, static_cast<Coord>(width), next_id);
    return family;
}

IntervalFamily build_J3() {
    IntervalFamily family;
    int next_id = 0;
    for (Coord length = 1; length <= 3; ++length) {
        emit_length_run(family, length, 5, next_id);
    }
    return family;
}

IntervalFamily build_J4() {
    IntervalFamily family;
    int next_id = 0;
    for (Coord length = 2; length <= 7; ++length) {
        emit_length_run(family, length, 21, next_id);
    }
    return family;
}

IntervalFamily build_J5() {
    IntervalFamily family;
    int next_id = 0;
    for (Coord length = 1; length <= 5; length += 2) {
        emit_length_run(family, length, 79, next_id);
    }
    return family;
}

IntervalFamily build_J6() {
    IntervalFamily family;
    int next_id = 0;
    // 13 units covering (0, 13).
    emit_length_run(family, 1, 13, next_id);
    // The length-3 interval over the three middle units.
    family.add(next_id++, 5, 8);
    // Two length-5 intervals hugging the ends, disjoint from the middle.
    family.add(next_id++, 0, 5);
    family.add(next_id++, 8, 13);
    // All 8 length-6 intervals; consecutive ones overlap in five units, and
    // (0,5)-(0,6) as well as (7,13)-(8,13) overlap in five units too, so all
    // ten long intervals are chained together.
    emit_length_run(family, 6, 13, next_id);
    return family;
}

GardiFixture build_gardi_fixture() {
    IntervalFamily family;
    family.add(1, 1, 7);
    family.add(2, 0, 2);
    family.add(3, 2, 4);
    family.add(4, 4, 6);
    family.add(5, 6, 14);
    family.add(6, 7, 9);
    family.add(7, 9, 11);
    family.add(8, 11, 13);
    family.add(9, 13, 15);

    std::map<int, int> raw;
    for (int id : {3, 4, 7, 8}) raw[id] = 1;
    for (int id : {1, 2, 5, 6, 9}) raw[id] = 2;
    return GardiFixture{std::move(family), make_partition(raw, 2)};
}

IntervalFamily build_random(std::size_t n, Coord coord_range, std::uint64_t seed) {
    if (coord_range < 2) throw std::invalid_argument("build_random: coord_range must be >= 2");
    std::mt19937_64 rng(seed);
    const auto draw = [&] {
        return static_cast<Coord>(rng() % static_cast<std::uint64_t>(coord_range + 1));
    };
    IntervalFamily family;
    for (std::size_t i = 0; i < n; ++i) {
        Coord left;
        Coord right;
        do {
            left = draw();
            right = draw();
        } while (left >= right);
        family.add(static_cast<int>(i), left, right);
    }
    return family;
}

IntervalFamily trim_to_claw(IntervalFamily family, int w) {
    while (auto witness = find_claw(family, w)) {
        family = family.without(witness->center);
    }
    return family;
}

}  // namespace clawpart
