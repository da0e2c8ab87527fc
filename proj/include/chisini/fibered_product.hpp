#pragma once

#include <string_view>
#include <vector>

#include "chisini/criterion.hpp"

// Intersection calculus on the normalized fibered product of two generic
// coverings with the same branch curve, and the uniqueness certificate built
// from it: if the Hodge Index Theorem forces the ramification class of one
// covering onto the residual class of the other, the node count makes the
// cross term inconsistent and no second covering can exist.

namespace chisini {

// Pairings of the ramification curve R~ (common to both pullbacks) and the
// residual curves C~1, C~2 of the two coverings upstairs on the fibered
// product.
struct IntersectionTable {
    Int deg1 = 0;   // degree of the first covering
    Int deg2 = 0;   // degree of the second covering
    Int r2 = 0;     // R~ . R~   = 2(3d+g-1) - c
    Int c1sq = 0;   // C~1 . C~1 = (deg1 - 2)(3d+g-1) - c
    Int c2sq = 0;   // C~2 . C~2 = (deg2 - 2)(3d+g-1) - c
    Int rc1 = 0;    // R~ . C~1  = c
    Int rc2 = 0;    // R~ . C~2  = c
    Int c1c2 = 0;   // C~1 . C~2 = c + 2n

    friend bool operator==(const IntersectionTable&, const IntersectionTable&) = default;
};

inline IntersectionTable intersection_table(const BranchInvariants& b, Int deg1, Int deg2) {
    if (deg1 < 3 || deg2 < 3)
        throw std::invalid_argument("covering degrees must be at least 3");
    const Int h = 3 * b.d + b.g - 1;
    return {deg1, deg2,
            2 * h - b.c,
            (deg1 - 2) * h - b.c,
            (deg2 - 2) * h - b.c,
            b.c, b.c,
            b.c + 2 * b.n};
}

// Determinant of the Gram block [[R~^2, R~.C~1], [R~.C~1, C~1^2]]. On a
// surface this pairing has signature (1, rank-1), so a vanishing determinant
// forces the two classes to be proportional.
constexpr Int hodge_determinant(const IntersectionTable& tb) {
    return tb.r2 * tb.c1sq - tb.rc1 * tb.rc1;
}

enum class CertOutcome {
    Contradiction,   // every admissible competing degree is impossible
    Inconclusive,    // some candidate escapes this obstruction
    UndefinedBound,  // 2(3d+g-1)-c <= 0: no candidate range to speak of
};

constexpr std::string_view cert_outcome_name(CertOutcome o) {
    switch (o) {
        case CertOutcome::Contradiction: return "Contradiction";
        case CertOutcome::Inconclusive: return "Inconclusive";
        case CertOutcome::UndefinedBound: return "UndefinedBound";
    }
    return "";
}

struct CandidateCheck {
    Int degree = 0;
    IntersectionTable table;
    Int determinant = 0;
    bool contradiction = false;
    std::string_view failed_condition;  // set exactly when contradiction is false
};

struct UniquenessCertificate {
    BranchInvariants branch;
    Int deg_primary = 0;
    BoundValue bound;
    bool degree3_excluded = false;  // nodes removed k=3 from the range (AX8)
    CertOutcome outcome = CertOutcome::Inconclusive;
    std::vector<CandidateCheck> candidates;
};

// Tries every admissible degree k for a second covering with the same branch
// curve: k ranges over [3, floor(bound)], with k=3 struck when the curve has
// nodes (AX8). A candidate is contradicted when the determinant vanishes and
// all of R~^2, C~1^2, C~2^2, (R~,C~i) coincide -- the classes then collapse
// to one, so every pairing against C~2 must agree -- yet (C~1,C~2) = c + 2n
// differs. Contradiction for every candidate (vacuously, if the range is
// empty) certifies uniqueness; anything else is reported as Inconclusive,
// never as non-uniqueness.
inline UniquenessCertificate uniqueness_certificate(const BranchInvariants& b, Int deg_primary) {
    if (deg_primary < 3)
        throw std::invalid_argument("primary covering degree must be at least 3");
    if (!feasible(b))
        throw std::invalid_argument("branch invariants must satisfy d >= 1 and g, c, n >= 0");

    UniquenessCertificate cert{b, deg_primary, kulikov_bound(b)};
    if (!cert.bound.defined) {
        cert.outcome = CertOutcome::UndefinedBound;
        return cert;
    }

    const Int k_max = cert.bound.num / cert.bound.den;  // floor: both positive
    bool all_contradict = true;
    for (Int k = 3; k <= k_max; ++k) {
        if (k == 3 && b.n > 0) {
            cert.degree3_excluded = true;
            continue;
        }
        CandidateCheck cc;
        cc.degree = k;
        cc.table = intersection_table(b, deg_primary, k);
        cc.determinant = hodge_determinant(cc.table);
        const IntersectionTable& tb = cc.table;
        if (cc.determinant != 0)
            cc.failed_condition = "determinant-nonzero";
        else if (!(tb.r2 == tb.c1sq && tb.c1sq == tb.c2sq && tb.c2sq == tb.rc1 && tb.rc1 == tb.rc2))
            cc.failed_condition = "self-intersections-differ";
        else if (tb.c1c2 == tb.c1sq)
            cc.failed_condition = "cross-term-consistent";
        else
            cc.contradiction = true;
        all_contradict = all_contradict && cc.contradiction;
        cert.candidates.push_back(cc);
    }
    cert.outcome = all_contradict ? CertOutcome::Contradiction : CertOutcome::Inconclusive;
    return cert;
}

} // namespace chisini
