#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

// Core invariant bookkeeping for a degree-m surface with ordinary
// singularities in P^3, the branch curve of its generic projection to P^2,
// and the Chern numbers of the smooth surface upstairs. Everything is exact
// integer arithmetic: a marginal inequality decided by a rounded double would
// silently corrupt the whole case analysis.

namespace chisini {

using Int = std::int64_t;

// Projection model: degree m, double curve of degree dbar with u irreducible
// components of total geometric genus gbar, and t triple points. Pinch points
// exist on such models but enter none of the formulas, so they are not a
// field.
struct SurfaceModel {
    Int m = 3;
    Int dbar = 0;
    Int u = 0;
    Int gbar = 0;
    Int t = 0;

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

// Branch curve data: a plane curve of degree 2d and geometric genus g whose
// only singularities are c cusps and n nodes. derive_branch may produce
// negative g, c, or n; that is how infeasible models announce themselves, so
// it is a verdict for the sweep, not an input error here.
struct BranchInvariants {
    Int d = 1;
    Int g = 0;
    Int c = 0;
    Int n = 0;

    friend bool operator==(const BranchInvariants&, const BranchInvariants&) = default;
};

// K^2 (self-intersection of the canonical class) and the topological Euler
// characteristic. Both are legitimately negative on parts of the search
// space.
struct ChernPair {
    Int k2 = 0;
    Int e = 0;

    friend bool operator==(const ChernPair&, const ChernPair&) = default;
};

// The double curve of a degree-m projection has degree at most
// (m-1)(m-2)/2: a generic line meets it in the nodes of a degree-m plane
// curve section.
constexpr Int max_double_curve_degree(Int m) { return (m - 1) * (m - 2) / 2; }

// Largest possible genus sum of u components of total degree dbar: put the
// whole degree excess into one plane component and make the rest lines,
// giving (dbar-u)(dbar-u-1)/2. Only meaningful for u >= 1.
constexpr Int max_component_genus(Int dbar, Int u) {
    const Int s = dbar - u;
    return s * (s - 1) / 2;
}

// Returns the first violated model constraint, or nullopt if the model is
// admissible. The message names the constraint so the CLI can echo it.
inline std::optional<std::string> validate(const SurfaceModel& sm) {
    if (sm.m < 3)
        return "m = " + std::to_string(sm.m) + ": degree must be at least 3";
    if (sm.dbar < 0)
        return "dbar = " + std::to_string(sm.dbar) + ": double-curve degree must be non-negative";
    if (sm.dbar > max_double_curve_degree(sm.m))
        return "dbar = " + std::to_string(sm.dbar) + " exceeds (m-1)(m-2)/2 = " +
               std::to_string(max_double_curve_degree(sm.m));
    if (sm.dbar == 0 ? sm.u != 0 : (sm.u < 1 || sm.u > sm.dbar))
        return "u = " + std::to_string(sm.u) +
               ": component count must lie in [1, dbar], or be 0 when dbar = 0";
    if (sm.gbar < 0)
        return "gbar = " + std::to_string(sm.gbar) + ": component genus sum must be non-negative";
    if (sm.u >= 1 && sm.gbar > max_component_genus(sm.dbar, sm.u))
        return "gbar = " + std::to_string(sm.gbar) + " exceeds the component bound (dbar-u)(dbar-u-1)/2 = " +
               std::to_string(max_component_genus(sm.dbar, sm.u));
    if (sm.t < 0)
        return "t = " + std::to_string(sm.t) + ": triple-point count must be non-negative";
    return std::nullopt;
}

inline void require_valid(const SurfaceModel& sm) {
    if (auto err = validate(sm)) throw std::invalid_argument(*err);
}

namespace detail {

// Raw formula evaluations, total over all integer inputs. The public
// operations validate first; the sweep judge calls these directly so that an
// infeasible tuple can be reported with its offending value instead of being
// rejected up front.

constexpr ChernPair chern_from_model_raw(const SurfaceModel& sm) {
    const Int m = sm.m, db = sm.dbar, w = sm.u - sm.gbar, t = sm.t;
    return {m * (m - 4) * (m - 4) - (5 * m - 24) * db - 4 * w + 9 * t,
            m * m * (m - 4) + 6 * m - (7 * m - 24) * db - 8 * w + 15 * t};
}

constexpr BranchInvariants derive_branch_raw(const SurfaceModel& sm) {
    const Int m = sm.m, db = sm.dbar, w = sm.u - sm.gbar, t = sm.t;
    // m(m-1) is even, so d is always integral; likewise m(m-1)(2m-5) below.
    const Int d = (m * (m - 1) - 2 * db) / 2;
    const Int g = m * (2 * m * m - 7 * m + 5) / 2 - 5 * (m - 3) * db - 4 * w + 9 * t + 1;
    const Int c = m * (m - 1) * (m - 2) - 3 * (m - 2) * db + 3 * t;
    // Closes the degree-genus count d(2d-3) = c + n + (g-1) by construction.
    const Int n = d * (2 * d - 3) - c - (g - 1);
    return {d, g, c, n};
}

} // namespace detail

// Chern numbers computed from the P^3 model.
inline ChernPair chern_from_model(const SurfaceModel& sm) {
    require_valid(sm);
    return detail::chern_from_model_raw(sm);
}

// Branch curve of the generic projection, computed from the P^3 model.
inline BranchInvariants derive_branch(const SurfaceModel& sm) {
    require_valid(sm);
    return detail::derive_branch_raw(sm);
}

// Chern numbers recovered from the branch curve of a degree-m covering. Must
// agree with chern_from_model through derive_branch; that identity is one of
// the exhaustive cross-checks.
constexpr ChernPair chern_from_branch(Int m, const BranchInvariants& b) {
    return {9 * m - 9 * b.d + b.g - 1, 3 * m + 2 * (b.g - 1) - b.c};
}

// Pluecker: degree of the dual curve of a cuspidal plane curve of degree 2d.
// May come out non-positive on infeasible data; the caller interprets.
constexpr Int dual_degree(const BranchInvariants& b) {
    return 2 * b.d * (2 * b.d - 1) - 3 * b.c - 2 * b.n;
}

// Hurwitz: genus of the preimage of a generic line under a degree-deg_f
// covering branched over a curve of degree 2d. The line meets the branch
// curve transversally in 2d points, so 2g - 2 = -2 deg_f + 2d.
constexpr Int line_preimage_genus(Int deg_f, Int d) { return 1 - deg_f + d; }

// Sign feasibility of branch data: a genuine cuspidal plane curve.
constexpr bool feasible(const BranchInvariants& b) {
    return b.d >= 1 && b.g >= 0 && b.c >= 0 && b.n >= 0;
}

} // namespace chisini
