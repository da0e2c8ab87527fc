#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "chisini/fibered_product.hpp"
#include "chisini/known_results.hpp"
#include "chisini/version.hpp"

// Exhaustive enumeration of all projection models up to degree 11 and the
// elimination pipeline judging each one. The pipeline order is fixed:
// arithmetic infeasibility comes before any imported result, so certificates
// credit geometry only when integers alone cannot decide.

namespace chisini {

enum class Outcome {
    NotViolating,              // degree criterion already applies (AX1)
    ArithmeticInfeasible,      // no such branch curve exists; see reason
    LemmaGenEliminated,        // low genus (AX5) or the K^2 <= 3e chain
    NonGeneralTypeEliminated,  // degree >= 8 with K^2 > 3e (AX3)
    RuledContradiction,        // reserved: ruled candidates are proved away
    Unrealizable,              // K^2 > 3e but the ruled bounds fail (AX4)
    UndefinedDenominator,      // 2(3d+g-1)-c <= 0: bucketed, never guessed
    Survivor,                  // nothing fired; classified below
};

inline constexpr std::size_t outcome_count = 8;

constexpr std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::NotViolating: return "NotViolating";
        case Outcome::ArithmeticInfeasible: return "ArithmeticInfeasible";
        case Outcome::LemmaGenEliminated: return "LemmaGenEliminated";
        case Outcome::NonGeneralTypeEliminated: return "NonGeneralTypeEliminated";
        case Outcome::RuledContradiction: return "RuledContradiction";
        case Outcome::Unrealizable: return "Unrealizable";
        case Outcome::UndefinedDenominator: return "UndefinedDenominator";
        case Outcome::Survivor: return "Survivor";
    }
    return "";
}

enum class InfeasibleReason {
    NegativeGenus,
    NegativeCuspCount,
    NegativeNodeCount,
    ComponentGenusBound,
    PlueckerBidual,
};

constexpr std::string_view reason_name(InfeasibleReason r) {
    switch (r) {
        case InfeasibleReason::NegativeGenus: return "negative-genus";
        case InfeasibleReason::NegativeCuspCount: return "negative-cusp-count";
        case InfeasibleReason::NegativeNodeCount: return "negative-node-count";
        case InfeasibleReason::ComponentGenusBound: return "component-genus-bound";
        case InfeasibleReason::PlueckerBidual: return "pluecker-bidual";
    }
    return "";
}

inline constexpr std::string_view classification_resolved = "resolved-unique";
inline constexpr std::string_view classification_veronese = "exceptional-veronese";
inline constexpr std::string_view classification_unresolved = "unresolved";

struct Verdict {
    SurfaceModel model;
    BranchInvariants branch;
    ChernPair chern;
    BoundValue bound;
    Outcome outcome = Outcome::Survivor;
    std::optional<InfeasibleReason> reason;  // ArithmeticInfeasible only
    std::string_view justification;          // axiom id or arithmetic_tag; empty otherwise
    std::string_view classification;         // survivors only
};

// Largest t keeping the node count non-negative at fixed (m, dbar, u, gbar):
// each triple point adds 3 cusps and 9 to g-1 while the degree is unchanged,
// so n drops by exactly 12 per unit of t.
inline Int triple_point_cap(Int m, Int dbar, Int u, Int gbar) {
    const Int n0 = detail::derive_branch_raw({m, dbar, u, gbar, 0}).n;
    return n0 >= 0 ? n0 / 12 : 0;
}

// Streams every admissible tuple of degree m in lexicographic order over
// (dbar, u, gbar, t). The ranges are exactly the model constraints plus the
// triple-point cap, which is what keeps the box finite.
template <typename Fn>
void enumeration_box(Int m, Fn&& fn) {
    if (m < 3) throw std::invalid_argument("enumeration requires m >= 3");
    for (Int dbar = 0; dbar <= max_double_curve_degree(m); ++dbar) {
        const Int u_lo = dbar == 0 ? 0 : 1;
        for (Int u = u_lo; u <= dbar; ++u) {
            const Int g_hi = u == 0 ? 0 : max_component_genus(dbar, u);
            for (Int gbar = 0; gbar <= g_hi; ++gbar) {
                const Int cap = triple_point_cap(m, dbar, u, gbar);
                for (Int t = 0; t <= cap; ++t) fn(SurfaceModel{m, dbar, u, gbar, t});
            }
        }
    }
}

// Materialized box for tests and small degrees; the sweep itself streams.
inline std::vector<SurfaceModel> collect_box(Int m) {
    std::vector<SurfaceModel> out;
    enumeration_box(m, [&](const SurfaceModel& sm) { out.push_back(sm); });
    return out;
}

// Explains why a tuple is outside the audited box, or nullopt if it is in.
inline std::optional<std::string> box_membership_error(const SurfaceModel& sm) {
    if (sm.m > 11)
        return "m = " + std::to_string(sm.m) +
               " is above the audited range; degrees 12 and up are settled wholesale (AX2)";
    if (auto err = validate(sm)) return err;
    const Int cap = triple_point_cap(sm.m, sm.dbar, sm.u, sm.gbar);
    if (sm.t > cap)
        return "t = " + std::to_string(sm.t) + " exceeds the triple-point cap " +
               std::to_string(cap) + " (the node count would go negative)";
    return std::nullopt;
}

// Survivor classification. A certified contradiction for every competing
// degree resolves the tuple; the signature K^2 = 9, e = 3 with a rational
// line preimage at degree 4 is the plane embedded by quadrics, the one
// genuinely non-unique branch curve; anything else stays unresolved.
inline std::string_view classify_survivor(Int m, const BranchInvariants& b, const ChernPair& ch) {
    if (uniqueness_certificate(b, m).outcome == CertOutcome::Contradiction)
        return classification_resolved;
    if (m == 4 && ch.k2 == 9 && ch.e == 3 && line_preimage_genus(4, b.d) == 0)
        return classification_veronese;
    return classification_unresolved;
}

// Fixed elimination pipeline. Order matters and is part of the certificate
// contract:
//   1. derive branch and Chern data;
//   2. arithmetic feasibility (g, c, n signs, the component-genus cap, the
//      bidual bound AX6) -> ArithmeticInfeasible;
//   3. undefined bound denominator -> UndefinedDenominator;
//   4. criterion polynomial positive -> NotViolating;
//   5. violating tuples: AX5 at degree >= 5 with g <= 3; the K^2 <= 3e chain
//      at degrees 6..11; AX3 at degree >= 8 with K^2 > 3e; at degrees 6 and 7
//      with K^2 > 3e the ruled bounds must both hold or the tuple is
//      Unrealizable (AX4);
//   6. anything left is a Survivor and gets classified. A ruled candidate
//      passing step 5 would land here as unresolved; the acceptance suite
//      proves that set empty.
// Degrees 12 and up are never judged: AX2 settles them without enumeration.
inline Verdict judge(const SurfaceModel& sm) {
    if (sm.m < 3 || sm.m > 11)
        throw std::invalid_argument("judge: m must lie in [3, 11]");
    if (sm.dbar < 0 || sm.dbar > max_double_curve_degree(sm.m) ||
        (sm.dbar == 0 ? sm.u != 0 : (sm.u < 1 || sm.u > sm.dbar)) || sm.gbar < 0 || sm.t < 0)
        throw std::invalid_argument("judge: " + *validate(sm));

    Verdict v;
    v.model = sm;
    v.branch = detail::derive_branch_raw(sm);
    v.chern = detail::chern_from_model_raw(sm);
    v.bound = kulikov_bound(v.branch);

    const auto infeasible = [&v](InfeasibleReason r, std::string_view why) {
        v.outcome = Outcome::ArithmeticInfeasible;
        v.reason = r;
        v.justification = why;
        return v;
    };

    if (v.branch.g < 0) return infeasible(InfeasibleReason::NegativeGenus, arithmetic_tag);
    if (v.branch.c < 0) return infeasible(InfeasibleReason::NegativeCuspCount, arithmetic_tag);
    if (v.branch.n < 0) return infeasible(InfeasibleReason::NegativeNodeCount, arithmetic_tag);
    if (sm.u >= 1 && sm.gbar > max_component_genus(sm.dbar, sm.u))
        return infeasible(InfeasibleReason::ComponentGenusBound, arithmetic_tag);
    if (plucker_infeasible(v.branch)) return infeasible(InfeasibleReason::PlueckerBidual, "AX6");

    if (!v.bound.defined) {
        v.outcome = Outcome::UndefinedDenominator;
        return v;
    }
    if (detail::criterion_polynomial(sm) > 0) {
        v.outcome = Outcome::NotViolating;
        v.justification = "AX1";
        return v;
    }

    if (sm.m >= 5 && v.branch.g <= 3) {
        v.outcome = Outcome::LemmaGenEliminated;
        v.justification = "AX5";
        return v;
    }
    const bool bmy_holds = v.chern.k2 <= 3 * v.chern.e;
    if (sm.m >= 6 && bmy_holds) {
        // K^2 <= 3e forces the bound below the degree here; this arm is
        // provably empty and the acceptance suite re-proves that.
        v.outcome = Outcome::LemmaGenEliminated;
        v.justification = "AX1";
        return v;
    }
    if (sm.m >= 8 && !bmy_holds) {
        v.outcome = Outcome::NonGeneralTypeEliminated;
        v.justification = "AX3";
        return v;
    }
    if ((sm.m == 6 || sm.m == 7) && !bmy_holds && !ruled_bounds_hold(v.chern)) {
        v.outcome = Outcome::Unrealizable;
        v.justification = "AX4";
        return v;
    }

    v.outcome = Outcome::Survivor;
    v.classification = classify_survivor(sm.m, v.branch, v.chern);
    return v;
}

struct DegreeSummary {
    Int m = 0;
    bool capped = false;  // degree >= 12: noted, not enumerated (AX2)
    long long tuples_examined = 0;
    std::array<long long, outcome_count> histogram{};
    std::vector<Verdict> survivors;
};

struct SweepCertificate {
    int version = certificate_version;
    Int m_min = 0;
    Int m_max = 0;
    std::vector<DegreeSummary> per_m;
};

// Judges every tuple of every degree in [m_min, min(m_max, 11)] and records
// histogram and survivors per degree; degrees above 11 become capped note
// entries. Deterministic: the box order is lexicographic and judging is pure.
inline SweepCertificate run_sweep(Int m_min, Int m_max) {
    if (m_min < 3 || m_min > m_max)
        throw std::invalid_argument("sweep range must satisfy 3 <= m_min <= m_max");
    SweepCertificate cert;
    cert.m_min = m_min;
    cert.m_max = m_max;
    for (Int m = m_min; m <= m_max; ++m) {
        DegreeSummary s;
        s.m = m;
        if (m >= 12) {
            s.capped = true;
        } else {
            enumeration_box(m, [&s](const SurfaceModel& sm) {
                const Verdict v = judge(sm);
                ++s.tuples_examined;
                ++s.histogram[static_cast<std::size_t>(v.outcome)];
                if (v.outcome == Outcome::Survivor) s.survivors.push_back(v);
            });
        }
        cert.per_m.push_back(std::move(s));
    }
    return cert;
}

// The audited answer: the only tuples in [3, 11] that survive every filter,
// with their classifications.
inline std::vector<std::pair<SurfaceModel, std::string_view>> expected_survivors(Int m_min,
                                                                                 Int m_max) {
    const std::pair<SurfaceModel, std::string_view> known[] = {
        {SurfaceModel{4, 2, 2, 0, 0}, classification_resolved},
        {SurfaceModel{4, 3, 3, 0, 1}, classification_veronese},
    };
    std::vector<std::pair<SurfaceModel, std::string_view>> out;
    for (const auto& entry : known)
        if (entry.first.m >= m_min && entry.first.m <= m_max) out.push_back(entry);
    return out;
}

// Expectation check behind --expect-paper: survivors (models and
// classifications, in order) must equal the expected set for the range.
inline bool survivors_match_expected(const SweepCertificate& cert) {
    std::vector<std::pair<SurfaceModel, std::string_view>> seen;
    for (const DegreeSummary& s : cert.per_m)
        for (const Verdict& v : s.survivors) seen.emplace_back(v.model, v.classification);
    return seen == expected_survivors(cert.m_min, cert.m_max);
}

} // namespace chisini
