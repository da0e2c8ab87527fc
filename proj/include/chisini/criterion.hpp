#pragma once

#include "chisini/invariants.hpp"

// The degree criterion dividing the search space: a generic covering whose
// degree strictly exceeds 4(3d+g-1)/(2(3d+g-1)-c) is determined by its branch
// curve. The bound is kept as an exact fraction and compared by
// cross-multiplication; its model-coordinate polynomial form lets the sweep
// test violation without deriving the branch first.

namespace chisini {

// Exact rational bound 4(3d+g-1) / (2(3d+g-1)-c). The derivation of the
// bound presumes a positive denominator; a non-positive one is flagged, never
// guessed at, and routes the tuple to its own verdict bucket.
struct BoundValue {
    Int num = 0;           // 4(3d+g-1)
    Int den = 0;           // 2(3d+g-1) - c
    bool defined = false;  // den > 0

    friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

constexpr BoundValue kulikov_bound(const BranchInvariants& b) {
    const Int h = 3 * b.d + b.g - 1;
    return {4 * h, 2 * h - b.c, 2 * h - b.c > 0};
}

// deg f > bound, decided exactly as m * den > num. Undefined bounds never
// hold; the caller decides whether to bucket them separately.
constexpr bool criterion_holds(Int m, const BranchInvariants& b) {
    const BoundValue v = kulikov_bound(b);
    return v.defined && m * v.den > v.num;
}

namespace detail {

// (m-2)[m(m-1)(m-2) - (7m-24)dbar - 8(u-gbar)] + 3(5m-12)t. For models with
// a positive bound denominator this has the sign of m*den - num, so its sign
// decides the criterion in model coordinates; the equivalence is re-proved by
// brute force over the whole enumeration box in the acceptance suite.
constexpr Int criterion_polynomial(const SurfaceModel& sm) {
    const Int m = sm.m;
    return (m - 2) * (m * (m - 1) * (m - 2) - (7 * m - 24) * sm.dbar - 8 * (sm.u - sm.gbar)) +
           3 * (5 * m - 12) * sm.t;
}

} // namespace detail

// True when the model violates the criterion, i.e. the covering degree does
// not exceed the bound and a second covering is not yet excluded.
inline bool violates_polynomial(const SurfaceModel& sm) {
    require_valid(sm);
    return detail::criterion_polynomial(sm) <= 0;
}

// Bogomolov-Miyaoka-Yau side property: for branch curves of surfaces on the
// right side of K^2 <= 3e the bound stays below 12. Checked globally as a
// property, never used as a filter.
inline bool nemirovski_bound_check(const BranchInvariants& b) {
    const BoundValue v = kulikov_bound(b);
    if (!v.defined)
        throw std::invalid_argument("undefined degree bound: 2(3d+g-1)-c = " +
                                    std::to_string(v.den) + " is not positive");
    return 12 * v.den > v.num;
}

} // namespace chisini
