#pragma once

#include <array>
#include <string_view>

#include "chisini/criterion.hpp"

// Registry of everything the audit trusts but does not re-derive. Each entry
// names an imported result, the guard under which a filter may cite it, the
// tag such a filter records, and the source. Filters never fire outside their
// guard, so every certificate line can be traced to either integer arithmetic
// or exactly one of these entries.

namespace chisini {

struct AxiomContext {
    Int m = 0;
    SurfaceModel model;
    BranchInvariants branch;
    ChernPair chern;
};

struct Axiom {
    std::string_view id;
    std::string_view conclusion;  // tag recorded when a filter cites this entry
    bool (*guard)(const AxiomContext&);
    std::string_view citation;
};

// AX4's structural consequence: a surface violating K^2 <= 3e is irregular
// ruled and then satisfies both of these; a tuple violating either cannot be
// realized by any surface at all.
constexpr bool ruled_bounds_hold(const ChernPair& ch) {
    return ch.k2 <= 2 * ch.e && ch.k2 <= -2;
}

// AX6: a reduced plane curve is the dual of its dual, so deg B = 2d can be at
// most dd(dd-1) for dd the dual degree, and a curve of degree >= 4 cannot
// have a dual of degree below 2.
constexpr bool plucker_infeasible(const BranchInvariants& b) {
    const Int dd = dual_degree(b);
    return 2 * b.d > dd * (dd - 1) || (dd < 2 && b.d >= 2);
}

namespace detail {

inline bool guard_bound_defined(const AxiomContext& cx) { return kulikov_bound(cx.branch).defined; }
inline bool guard_degree_12_up(const AxiomContext& cx) { return cx.m >= 12; }
inline bool guard_bmy_fails_8_up(const AxiomContext& cx) {
    return cx.m >= 8 && cx.chern.k2 > 3 * cx.chern.e;
}
inline bool guard_bmy_fails(const AxiomContext& cx) { return cx.chern.k2 > 3 * cx.chern.e; }
inline bool guard_low_genus_5_up(const AxiomContext& cx) { return cx.m >= 5 && cx.branch.g <= 3; }
inline bool guard_always(const AxiomContext&) { return true; }
inline bool guard_never(const AxiomContext&) { return false; }  // assumptions, not filters
inline bool guard_nodes_present(const AxiomContext& cx) { return cx.branch.n > 0; }

} // namespace detail

// Fixed-order registry, AX1 first. Built once, immutable, safe to read
// concurrently.
inline const std::array<Axiom, 9>& registry() {
    static const std::array<Axiom, 9> table = {{
        {"AX1", "criterion-applies", detail::guard_bound_defined,
         "Kulikov, On Chisini's conjecture, Izv. Math. 63 (1999), Theorem 1: a generic covering "
         "of the plane whose degree strictly exceeds 4(3d+g-1)/(2(3d+g-1)-c) is determined by its "
         "branch curve."},
        {"AX2", "degree-capped", detail::guard_degree_12_up,
         "Nemirovski, On Kulikov's theorem on the Chisini conjecture, Izv. Math. 65 (2001): under "
         "the Bogomolov-Miyaoka-Yau inequality the degree bound stays below 12, so coverings of "
         "degree 12 and above need no enumeration."},
        {"AX3", "NonGeneralTypeEliminated", detail::guard_bmy_fails_8_up,
         "Nemirovski, Izv. Math. 65 (2001), Theorem 2: for generic coverings of degree at least 8 "
         "whose covering surface is of non-general type, the branch curve determines the "
         "covering."},
        {"AX4", "Unrealizable", detail::guard_bmy_fails,
         "Enriques-Kodaira classification: a surface violating the Bogomolov-Miyaoka-Yau "
         "inequality K^2 <= 3e is an irregular ruled surface, and such a surface satisfies "
         "K^2 <= 2e and K^2 <= -2."},
        {"AX5", "LemmaGenEliminated", detail::guard_low_genus_5_up,
         "Kulikov, Izv. Math. 63 (1999), Theorem 11: the branch curve determines a generic "
         "covering when its geometric genus is at most 3; applied here only to covering degrees "
         "5 and above."},
        {"AX6", "ArithmeticInfeasible", detail::guard_always,
         "Pluecker biduality: a reduced plane curve is the dual of its dual, so its degree 2d is "
         "at most dd(dd-1) where dd = 2d(2d-1) - 3c - 2n is the dual degree, and dd >= 2 whenever "
         "2d >= 4."},
        {"AX7", "modeling-assumption", detail::guard_never,
         "Moishezon, Stable branch curves and braid monodromies, LNM 862 (1981), Theorem 3: a "
         "generic linear projection of a smooth surface to P^3 has only ordinary singularities "
         "(double curve, triple points, pinch points). Assumption behind the model; never a "
         "filter."},
        {"AX8", "candidate-degree-excluded", detail::guard_nodes_present,
         "A degree-3 generic covering by a nonsingular surface is branched over a curve without "
         "nodes (a node would force a singular point upstairs), so nodes exclude degree-3 "
         "competitors."},
        {"AX9", "modeling-assumption", detail::guard_never,
         "Kulikov, Izv. Math. 63 (1999), Propositions 2-4: the normalized fibered product of two "
         "generic coverings with a common branch curve is an irreducible nonsingular surface "
         "carrying the intersection numbers used by the uniqueness certificate. Assumption behind "
         "the fibered-product calculus; never a filter."},
    }};
    return table;
}

inline const Axiom& axiom(std::string_view id) {
    for (const Axiom& a : registry())
        if (a.id == id) return a;
    throw std::invalid_argument("unknown axiom id: " + std::string(id));
}

// Tag carried by eliminations that rest on integer arithmetic alone.
inline constexpr std::string_view arithmetic_tag = "arithmetic-infeasibility";

} // namespace chisini
