#include "clawpart/formulas.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace clawpart {

namespace {

using Wide = __int128;

constexpr std::int64_t kMax64 = std::numeric_limits<std::int64_t>::max();

// Largest e >= 0 with base^e * den <= num. Requires num >= den >= 1, base >= 2.
int floor_log_rational(std::int64_t base, Wide num, std::int64_t den) {
    if (base < 2 || den < 1 || num < den) {
        throw std::invalid_argument("floor_log_rational: bad arguments");
    }
    int e = 0;
    Wide acc = den;
    while (acc * base <= num) {
        acc *= base;
        ++e;
    }
    return e;
}

}  // namespace

std::int64_t mu_formula(int k, int v) {
    if (k < 1 || v < 1) throw std::invalid_argument("mu_formula: requires k >= 1, v >= 1");
    Wide power = 1;
    const Wide base = static_cast<Wide>(v) + 1;
    for (int i = 0; i < k + 1; ++i) {
        power *= base;
        if (power > static_cast<Wide>(kMax64)) {
            throw std::range_error("mu_formula(" + std::to_string(k) + ", " +
                                   std::to_string(v) + ") exceeds 64-bit range");
        }
    }
    return static_cast<std::int64_t>((power - base) / v);
}

int kappa_formula(std::int64_t n, int v) {
    if (n < 1 || v < 1) throw std::invalid_argument("kappa_formula: requires n >= 1, v >= 1");
    const Wide target = static_cast<Wide>(n) * v + 1;
    const Wide base = static_cast<Wide>(v) + 1;
    int k = 0;
    Wide acc = 1;
    while (acc * base <= target) {
        acc *= base;
        ++k;
    }
    return k;
}

KappaHatBounds kappa_hat_bounds(std::int64_t w, int v) {
    if (v < 1 || w < v) {
        throw std::invalid_argument("kappa_hat_bounds: requires w >= v >= 1");
    }
    if (w == v) return {1, 1};

    // Known exact values for small inputs.
    struct Exact {
        std::int64_t w;
        int v;
        int value;
    };
    static constexpr Exact kExact[] = {
        {2, 1, 2}, {3, 1, 3}, {3, 2, 2}, {4, 2, 3}, {5, 2, 3}, {6, 2, 3}, {5, 3, 2},
    };
    for (const Exact& e : kExact) {
        if (e.w == w && e.v == v) return {e.value, e.value};
    }

    const std::int64_t base = static_cast<std::int64_t>(v) + 1;
    const int lower = floor_log_rational(base, w, 1) + 1;
    int upper;
    if (v == 1) {
        upper = floor_log_rational(2, Wide{2} * (w - 1), 1) + 2;
        // The identity partition into w cluster parts caps the v = 1 case.
        if (w < static_cast<std::int64_t>(upper)) upper = static_cast<int>(w);
    } else if (v == 2) {
        upper = floor_log_rational(3, Wide{3} * (w - 1), 2) + 2;
    } else {
        upper = floor_log_rational(base, w - 1, v - 2) + 2;
    }
    return {lower, upper};
}

}  // namespace clawpart
