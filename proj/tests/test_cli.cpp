#include "support.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace {

using testsupport::run_cli;

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

TEST(CliEval, JsonVerdict) {
    const auto res = run_cli("eval 4 2 2 0 0 --json");
    ASSERT_EQ(res.exit_code, 0) << res.output;
    const auto j = nlohmann::json::parse(res.output);
    EXPECT_EQ(j["outcome"], "Survivor");
    EXPECT_EQ(j["classification"], "resolved-unique");
    EXPECT_EQ(j["deg_b"], 8);
    EXPECT_EQ(j["kulikov_bound"]["num"], 48);
    EXPECT_EQ(j["kulikov_bound"]["den"], 12);
}

TEST(CliEval, TextVerdict) {
    const auto res = run_cli("eval 5 4 2 0 0");
    ASSERT_EQ(res.exit_code, 0) << res.output;
    EXPECT_NE(res.output.find("outcome: LemmaGenEliminated"), std::string::npos);
    EXPECT_NE(res.output.find("justification: AX5"), std::string::npos);
}

TEST(CliEval, OutOfBoxTuplesFailWithAnExplanation) {
    const auto low = run_cli("eval 2 0 0 0 0");
    EXPECT_EQ(low.exit_code, 1);
    EXPECT_NE(low.output.find("chisini-audit: eval:"), std::string::npos);

    const auto high = run_cli("eval 12 0 0 0 0");
    EXPECT_EQ(high.exit_code, 1);
    EXPECT_NE(high.output.find("AX2"), std::string::npos);

    const auto dbar = run_cli("eval 4 7 1 0 0");
    EXPECT_EQ(dbar.exit_code, 1);
    EXPECT_NE(dbar.output.find("exceeds"), std::string::npos);

    const auto t = run_cli("eval 4 3 3 0 2");
    EXPECT_EQ(t.exit_code, 1);
    EXPECT_NE(t.output.find("triple-point cap"), std::string::npos);
}

TEST(CliSweep, JsonDocument) {
    const auto res = run_cli("sweep 3 4 --json --expect-paper");
    ASSERT_EQ(res.exit_code, 0) << res.output;
    const auto j = nlohmann::json::parse(res.output);
    EXPECT_EQ(j["version"], 1);
    ASSERT_EQ(j["per_m"].size(), 2u);
    EXPECT_EQ(j["per_m"][1]["survivors"].size(), 2u);
    EXPECT_EQ(j["axioms"].size(), 9u);
}

TEST(CliSweep, TextReportWithExpectation) {
    const auto res = run_cli("sweep 3 4 --expect-paper");
    ASSERT_EQ(res.exit_code, 0) << res.output;
    EXPECT_NE(res.output.find("survivors match the expected families: PASS"), std::string::npos);
}

TEST(CliSweep, ExpectationHoldsOnSurvivorFreeRanges) {
    const auto res = run_cli("sweep 6 7 --expect-paper");
    ASSERT_EQ(res.exit_code, 0) << res.output;
    EXPECT_NE(res.output.find("survivors: 0"), std::string::npos);
}

TEST(CliSweep, RangeGuards) {
    const auto bad = run_cli("sweep 5 3");
    EXPECT_EQ(bad.exit_code, 1);
    EXPECT_NE(bad.output.find("range must satisfy"), std::string::npos);

    const auto high = run_cli("sweep 3 12");
    EXPECT_EQ(high.exit_code, 1);
    EXPECT_NE(high.output.find("--allow-above-11"), std::string::npos);

    const auto allowed = run_cli("sweep 12 13 --allow-above-11");
    ASSERT_EQ(allowed.exit_code, 0) << allowed.output;
    EXPECT_NE(allowed.output.find("m = 12: settled by AX2, not enumerated"), std::string::npos);
}

TEST(CliFibered, Contradiction) {
    const auto res = run_cli("fibered 4 1 12 8 4 --json");
    ASSERT_EQ(res.exit_code, 0) << res.output;
    const auto j = nlohmann::json::parse(res.output);
    EXPECT_EQ(j["outcome"], "Contradiction");
    ASSERT_EQ(j["excluded"].size(), 1u);
    EXPECT_EQ(j["excluded"][0]["axiom"], "AX8");
}

TEST(CliFibered, UndefinedBoundIsSuccessNotError) {
    const auto res = run_cli("fibered 1 0 4 0 3");
    ASSERT_EQ(res.exit_code, 0) << res.output;
    EXPECT_NE(res.output.find("outcome: UndefinedBound"), std::string::npos);
}

TEST(CliFibered, BadInputsFail) {
    const auto zero = run_cli("fibered 0 0 0 0 3");
    EXPECT_EQ(zero.exit_code, 1);
    EXPECT_NE(zero.output.find("d >= 1"), std::string::npos);

    const auto deg = run_cli("fibered 4 1 12 8 2");
    EXPECT_EQ(deg.exit_code, 1);
    EXPECT_NE(deg.output.find("at least 3"), std::string::npos);
}

TEST(CliOutput, OutFileHoldsTheJsonDocument) {
    testsupport::TempDir dir("chisini-cli-out");
    const auto json_path = dir.path() / "cert.json";
    const auto res = run_cli("sweep 3 4 --json --out " + json_path.string());
    ASSERT_EQ(res.exit_code, 0) << res.output;
    EXPECT_EQ(slurp(json_path), res.output);

    // In text mode the file still gets the JSON document.
    const auto eval_path = dir.path() / "eval.json";
    const auto text = run_cli("eval 4 2 2 0 0 --out " + eval_path.string());
    ASSERT_EQ(text.exit_code, 0) << text.output;
    EXPECT_NE(text.output.find("tuple (4; 2, 2, 0, 0)"), std::string::npos);
    const auto j = nlohmann::json::parse(slurp(eval_path));
    EXPECT_EQ(j["outcome"], "Survivor");
}

TEST(CliOutput, UnwritableOutPathFails) {
    const auto res = run_cli("eval 4 2 2 0 0 --out /nonexistent-dir/x/cert.json");
    EXPECT_EQ(res.exit_code, 1);
    EXPECT_NE(res.output.find("cannot write"), std::string::npos);
}

TEST(CliShell, SubcommandRequired) {
    const auto res = run_cli("");
    EXPECT_EQ(res.exit_code, 1);
    EXPECT_NE(res.output.find("subcommand"), std::string::npos);
}

TEST(CliShell, HelpAndVersion) {
    const auto version = run_cli("--version");
    EXPECT_EQ(version.exit_code, 0);
    EXPECT_NE(version.output.find("1.0.0"), std::string::npos);

    const auto help = run_cli("--help");
    EXPECT_EQ(help.exit_code, 0);
    for (const char* name : {"eval", "sweep", "fibered"})
        EXPECT_NE(help.output.find(name), std::string::npos) << name;
}

TEST(CliShell, DeterministicOutput) {
    const auto a = run_cli("sweep 3 5 --json");
    const auto b = run_cli("sweep 3 5 --json");
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
}

} // namespace
