// chisini-audit: exact-integer audit of the branch-curve case analysis for
// generic plane projections. Three entry points: judge one tuple (eval),
// enumerate a degree range and certify the survivor set (sweep), and run the
// fibered-product uniqueness certificate on explicit branch data (fibered).
//
// Exit codes: 0 success, 1 usage or I/O error, 2 survivor mismatch under
// --expect-paper.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chisini/report.hpp"

namespace {

struct OutputOptions {
    bool json = false;
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_flag("--json", opts.json, "print the JSON document instead of the text report");
    cmd->add_option("--out", opts.out_path, "also write the JSON document to this path");
}

// Writes the JSON document to opts.out_path when set, then prints either the
// document or the text report on stdout.
int emit(const chisini::ordered_json& doc, const std::string& text, const OutputOptions& opts) {
    if (!opts.out_path.empty()) {
        std::ofstream file(opts.out_path, std::ios::binary);
        file << chisini::dump_json(doc);
        if (!file.good()) {
            std::cerr << "chisini-audit: cannot write " << opts.out_path << "\n";
            return 1;
        }
    }
    std::cout << (opts.json ? chisini::dump_json(doc) : text);
    return 0;
}

struct EvalArgs {
    chisini::Int m = 0, dbar = 0, u = 0, gbar = 0, t = 0;
    OutputOptions out;
};

int run_eval(const EvalArgs& args) {
    const chisini::SurfaceModel sm{args.m, args.dbar, args.u, args.gbar, args.t};
    if (auto err = chisini::box_membership_error(sm)) {
        std::cerr << "chisini-audit: eval: " << *err << "\n";
        return 1;
    }
    const chisini::Verdict v = chisini::judge(sm);
    return emit(chisini::eval_document(v), chisini::render_eval(v), args.out);
}

struct SweepArgs {
    chisini::Int m_min = 0, m_max = 0;
    bool expect_paper = false;
    bool allow_above_11 = false;
    OutputOptions out;
};

int run_sweep_cmd(const SweepArgs& args) {
    if (args.m_min < 3 || args.m_min > args.m_max) {
        std::cerr << "chisini-audit: sweep: range must satisfy 3 <= m_min <= m_max\n";
        return 1;
    }
    if (args.m_max > 11 && !args.allow_above_11) {
        std::cerr << "chisini-audit: sweep: m_max above 11 needs --allow-above-11; degrees 12 "
                     "and up are settled by AX2 and are only noted, never enumerated\n";
        return 1;
    }
    const chisini::SweepCertificate cert = chisini::run_sweep(args.m_min, args.m_max);
    std::optional<bool> expected_ok;
    if (args.expect_paper) expected_ok = chisini::survivors_match_expected(cert);
    const int rc = emit(chisini::sweep_document(cert),
                        chisini::sweep_report(cert, expected_ok).str(), args.out);
    if (rc != 0) return rc;
    return expected_ok && !*expected_ok ? 2 : 0;
}

struct FiberedArgs {
    chisini::Int d = 0, g = 0, c = 0, n = 0, deg1 = 0;
    OutputOptions out;
};

int run_fibered(const FiberedArgs& args) {
    const chisini::UniquenessCertificate cert =
        chisini::uniqueness_certificate({args.d, args.g, args.c, args.n}, args.deg1);
    return emit(chisini::fibered_document(cert), chisini::render_fibered(cert), args.out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-integer audit of branch curves of generic plane projections"};
    app.set_version_flag("--version", CHISINI_AUDIT_VERSION);
    app.require_subcommand(1);

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "judge one model tuple");
    eval->add_option("m", eval_args.m, "surface degree")->required();
    eval->add_option("dbar", eval_args.dbar, "double-curve degree")->required();
    eval->add_option("u", eval_args.u, "double-curve component count")->required();
    eval->add_option("gbar", eval_args.gbar, "component genus sum")->required();
    eval->add_option("t", eval_args.t, "triple-point count")->required();
    add_output_options(eval, eval_args.out);

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "enumerate and judge a degree range");
    sweep->add_option("m_min", sweep_args.m_min, "first degree")->required();
    sweep->add_option("m_max", sweep_args.m_max, "last degree")->required();
    sweep->add_flag("--expect-paper", sweep_args.expect_paper,
                    "exit 2 unless the survivors are exactly the two known exceptional "
                    "families lying in the range");
    sweep->add_flag("--allow-above-11", sweep_args.allow_above_11,
                    "permit m_max above 11; such degrees are noted as settled (AX2), "
                    "not enumerated");
    add_output_options(sweep, sweep_args.out);

    FiberedArgs fibered_args;
    CLI::App* fibered = app.add_subcommand("fibered", "uniqueness certificate for branch data");
    fibered->add_option("d", fibered_args.d, "half-degree of the branch curve")->required();
    fibered->add_option("g", fibered_args.g, "geometric genus")->required();
    fibered->add_option("c", fibered_args.c, "cusp count")->required();
    fibered->add_option("n", fibered_args.n, "node count")->required();
    fibered->add_option("deg1", fibered_args.deg1, "primary covering degree")->required();
    add_output_options(fibered, fibered_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help/version keep 0; any usage error is 1
    }

    try {
        if (eval->parsed()) return run_eval(eval_args);
        if (sweep->parsed()) return run_sweep_cmd(sweep_args);
        return run_fibered(fibered_args);
    } catch (const std::exception& ex) {
        std::cerr << "chisini-audit: " << ex.what() << "\n";
        return 1;
    }
}
