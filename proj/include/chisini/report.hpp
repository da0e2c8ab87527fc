#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chisini/sweep.hpp"
#include "chisini/version.hpp"

// JSON certificate serialization and the human-readable reports derived from
// it. JSON is the canonical format: UTF-8, fixed key order, integers only --
// the one rational quantity is emitted as {num, den}, never as a float.

namespace chisini {

using ordered_json = nlohmann::ordered_json;

inline ordered_json json_of(const SurfaceModel& sm) {
    return {{"m", sm.m}, {"dbar", sm.dbar}, {"u", sm.u}, {"gbar", sm.gbar}, {"t", sm.t}};
}

inline ordered_json json_of(const BranchInvariants& b) {
    return {{"d", b.d}, {"g", b.g}, {"c", b.c}, {"n", b.n}};
}

inline ordered_json json_of(const ChernPair& ch) { return {{"k2", ch.k2}, {"e", ch.e}}; }

inline ordered_json json_of(const BoundValue& v) {
    return {{"num", v.num}, {"den", v.den}, {"defined", v.defined}};
}

namespace detail {

inline void append_verdict_tail(ordered_json& j, const Verdict& v) {
    if (!v.justification.empty()) j["justification"] = v.justification;
    if (v.reason) j["reason"] = reason_name(*v.reason);
    if (!v.classification.empty()) j["classification"] = v.classification;
}

} // namespace detail

inline ordered_json verdict_json(const Verdict& v) {
    ordered_json j{{"model", json_of(v.model)},
                   {"branch", json_of(v.branch)},
                   {"chern", json_of(v.chern)},
                   {"kulikov_bound", json_of(v.bound)},
                   {"outcome", outcome_name(v.outcome)}};
    detail::append_verdict_tail(j, v);
    return j;
}

// Single-tuple document: the verdict plus everything the formulas say about
// the tuple, with both Chern derivations spelled out.
inline ordered_json eval_document(const Verdict& v) {
    ordered_json j{{"model", json_of(v.model)},
                   {"branch", json_of(v.branch)},
                   {"deg_b", 2 * v.branch.d},
                   {"chern_from_model", json_of(v.chern)},
                   {"chern_from_branch", json_of(chern_from_branch(v.model.m, v.branch))},
                   {"dual_degree", dual_degree(v.branch)},
                   {"kulikov_bound", json_of(v.bound)},
                   {"outcome", outcome_name(v.outcome)}};
    detail::append_verdict_tail(j, v);
    return j;
}

inline ordered_json sweep_document(const SweepCertificate& cert) {
    ordered_json axioms = ordered_json::array();
    for (const Axiom& a : registry()) axioms.push_back({{"id", a.id}, {"citation", a.citation}});

    ordered_json per_m = ordered_json::array();
    for (const DegreeSummary& s : cert.per_m) {
        if (s.capped) {
            per_m.push_back({{"m", s.m}, {"note", "AX2"}});
            continue;
        }
        ordered_json hist;
        for (std::size_t i = 0; i < outcome_count; ++i)
            hist[std::string(outcome_name(static_cast<Outcome>(i)))] = s.histogram[i];
        ordered_json survivors = ordered_json::array();
        for (const Verdict& v : s.survivors) survivors.push_back(verdict_json(v));
        per_m.push_back({{"m", s.m},
                         {"tuples_examined", s.tuples_examined},
                         {"histogram", hist},
                         {"survivors", survivors}});
    }

    return {{"version", cert.version},
            {"m_range", {{"min", cert.m_min}, {"max", cert.m_max}}},
            {"axioms", axioms},
            {"per_m", per_m}};
}

inline ordered_json fibered_document(const UniquenessCertificate& cert) {
    ordered_json excluded = ordered_json::array();
    if (cert.degree3_excluded) excluded.push_back({{"degree", 3}, {"axiom", "AX8"}});
    ordered_json candidates = ordered_json::array();
    for (const CandidateCheck& cc : cert.candidates) {
        ordered_json c{{"degree", cc.degree},
                       {"table",
                        {{"deg1", cc.table.deg1},
                         {"deg2", cc.table.deg2},
                         {"r2", cc.table.r2},
                         {"c1sq", cc.table.c1sq},
                         {"c2sq", cc.table.c2sq},
                         {"rc1", cc.table.rc1},
                         {"rc2", cc.table.rc2},
                         {"c1c2", cc.table.c1c2}}},
                       {"determinant", cc.determinant},
                       {"contradiction", cc.contradiction}};
        if (!cc.failed_condition.empty()) c["failed_condition"] = cc.failed_condition;
        candidates.push_back(c);
    }
    return {{"branch", json_of(cert.branch)},
            {"deg_primary", cert.deg_primary},
            {"kulikov_bound", json_of(cert.bound)},
            {"outcome", cert_outcome_name(cert.outcome)},
            {"excluded", excluded},
            {"candidates", candidates}};
}

inline std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline std::string tuple_str(const SurfaceModel& sm) {
    std::ostringstream os;
    os << "(" << sm.m << "; " << sm.dbar << ", " << sm.u << ", " << sm.gbar << ", " << sm.t << ")";
    return os.str();
}

inline std::string bound_str(const BoundValue& v) {
    if (!v.defined)
        return "undefined (2(3d+g-1)-c = " + std::to_string(v.den) + " is not positive)";
    return std::to_string(v.num) + "/" + std::to_string(v.den);
}

inline std::string table_str(const IntersectionTable& tb) {
    std::ostringstream os;
    os << "R~^2 = " << tb.r2 << ", C~1^2 = " << tb.c1sq << ", C~2^2 = " << tb.c2sq
       << ", (R~,C~1) = " << tb.rc1 << ", (R~,C~2) = " << tb.rc2 << ", (C~1,C~2) = " << tb.c1c2;
    return os.str();
}

inline std::string infeasibility_detail(const Verdict& v) {
    std::ostringstream os;
    switch (*v.reason) {
        case InfeasibleReason::NegativeGenus: os << "g = " << v.branch.g << " is negative"; break;
        case InfeasibleReason::NegativeCuspCount:
            os << "c = " << v.branch.c << " is negative";
            break;
        case InfeasibleReason::NegativeNodeCount:
            os << "n = " << v.branch.n << " is negative";
            break;
        case InfeasibleReason::ComponentGenusBound:
            os << "gbar = " << v.model.gbar << " exceeds (dbar-u)(dbar-u-1)/2 = "
               << max_component_genus(v.model.dbar, v.model.u);
            break;
        case InfeasibleReason::PlueckerBidual: {
            const Int dd = dual_degree(v.branch);
            if (2 * v.branch.d > dd * (dd - 1))
                os << "deg B = " << 2 * v.branch.d << " > " << dd << "*" << dd - 1 << " = "
                   << dd * (dd - 1) << ", the bidual cap";
            else
                os << "dual degree " << dd << " < 2 with deg B >= 4";
            break;
        }
    }
    return os.str();
}

inline std::string candidate_line(const CandidateCheck& cc) {
    std::ostringstream os;
    os << "degree " << cc.degree << ": " << table_str(cc.table) << ", det = " << cc.determinant;
    if (cc.contradiction)
        os << " -> contradiction: one class, yet (C~1,C~2) = " << cc.table.c1c2 << " while "
           << "(R~,C~2) = " << cc.table.rc2;
    else
        os << " -> no obstruction (" << cc.failed_condition << ")";
    return os.str();
}

} // namespace detail

inline std::string render_eval(const Verdict& v) {
    std::ostringstream os;
    os << "tuple " << detail::tuple_str(v.model) << "\n";
    os << "branch curve: deg B = " << 2 * v.branch.d << " (d = " << v.branch.d
       << "), g = " << v.branch.g << ", c = " << v.branch.c << ", n = " << v.branch.n << "\n";
    const ChernPair from_branch = chern_from_branch(v.model.m, v.branch);
    os << "chern (from model):  K^2 = " << v.chern.k2 << ", e = " << v.chern.e << "\n";
    os << "chern (from branch): K^2 = " << from_branch.k2 << ", e = " << from_branch.e << "\n";
    os << "dual curve degree: " << dual_degree(v.branch) << "\n";
    os << "degree bound: " << detail::bound_str(v.bound) << "\n";
    os << "outcome: " << outcome_name(v.outcome) << "\n";
    if (v.reason) os << "reason: " << reason_name(*v.reason) << " (" << detail::infeasibility_detail(v) << ")\n";
    if (!v.justification.empty()) os << "justification: " << v.justification << "\n";
    if (!v.classification.empty()) os << "classification: " << v.classification << "\n";
    return os.str();
}

inline std::string render_fibered(const UniquenessCertificate& cert) {
    std::ostringstream os;
    os << "branch curve: d = " << cert.branch.d << " (deg B = " << 2 * cert.branch.d
       << "), g = " << cert.branch.g << ", c = " << cert.branch.c << ", n = " << cert.branch.n
       << "\n";
    os << "primary covering degree: " << cert.deg_primary << "\n";
    os << "degree bound: " << detail::bound_str(cert.bound) << "\n";
    if (cert.bound.defined) {
        const Int k_max = cert.bound.num / cert.bound.den;
        if (k_max < 3)
            os << "no admissible competing degree (bound below 3)\n";
        else
            os << "competing degrees: 3 .. " << k_max << "\n";
    }
    if (cert.degree3_excluded) os << "degree 3 excluded: the branch curve has nodes (AX8)\n";
    for (const CandidateCheck& cc : cert.candidates)
        os << "  " << detail::candidate_line(cc) << "\n";
    os << "outcome: " << cert_outcome_name(cert.outcome) << "\n";
    return os.str();
}

// Rendered sweep report: header (version, range, axiom registry), body
// (per-degree outcome table and survivor details with their intersection
// tables), footer (totals and check summary).
struct ReportDocument {
    std::string header;
    std::string body;
    std::string footer;

    std::string str() const { return header + body + footer; }
};

inline ReportDocument sweep_report(const SweepCertificate& cert,
                                   std::optional<bool> expected_ok = std::nullopt) {
    ReportDocument doc;
    {
        std::ostringstream os;
        os << "chisini-audit " << engine_version << "\n";
        os << "sweep: m = " << cert.m_min << " .. " << cert.m_max << "\n";
        os << "axioms:\n";
        for (const Axiom& a : registry()) os << "  " << a.id << "  " << a.citation << "\n";
        doc.header = os.str();
    }
    long long total = 0, survivor_total = 0;
    bool histograms_consistent = true;
    {
        std::ostringstream os;
        os << "per-degree outcomes:\n";
        for (const DegreeSummary& s : cert.per_m) {
            if (s.capped) {
                os << "  m = " << s.m << ": settled by AX2, not enumerated\n";
                continue;
            }
            os << "  m = " << s.m << ": " << s.tuples_examined << " examined";
            long long sum = 0;
            for (std::size_t i = 0; i < outcome_count; ++i) {
                sum += s.histogram[i];
                if (s.histogram[i] != 0)
                    os << " | " << outcome_name(static_cast<Outcome>(i)) << " " << s.histogram[i];
            }
            os << "\n";
            histograms_consistent = histograms_consistent && sum == s.tuples_examined;
            total += s.tuples_examined;
            survivor_total += static_cast<long long>(s.survivors.size());
        }
        os << "survivors: " << survivor_total << "\n";
        for (const DegreeSummary& s : cert.per_m) {
            for (const Verdict& v : s.survivors) {
                os << "  " << detail::tuple_str(v.model) << ": d = " << v.branch.d
                   << ", g = " << v.branch.g << ", c = " << v.branch.c << ", n = " << v.branch.n
                   << ", K^2 = " << v.chern.k2 << ", e = " << v.chern.e << " -> "
                   << v.classification << "\n";
                for (const CandidateCheck& cc :
                     uniqueness_certificate(v.branch, v.model.m).candidates)
                    os << "    " << detail::candidate_line(cc) << "\n";
            }
        }
        doc.body = os.str();
    }
    {
        std::ostringstream os;
        os << "totals: " << total << " examined, " << survivor_total << " survivors\n";
        os << "checks:\n";
        os << "  histogram totals match examined counts: "
           << (histograms_consistent ? "PASS" : "FAIL") << "\n";
        if (expected_ok)
            os << "  survivors match the expected families: " << (*expected_ok ? "PASS" : "FAIL")
               << "\n";
        doc.footer = os.str();
    }
    return doc;
}

} // namespace chisini
