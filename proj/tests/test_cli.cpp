#include "ewb/error.hpp"
#include "ewb/report.hpp"
#include "ewb/run.hpp"

#include <doctest.h>

#include <fstream>

using namespace ewb;

TEST_SUITE_BEGIN("cli");

TEST_CASE("catalog list succeeds deterministically") {
    RunResult a = run_command({"catalog", "list"});
    RunResult b = run_command({"catalog", "list"});
    CHECK(a.exit_code == 0);
    CHECK(emit_report(a.report, ReportFormat::Json) == emit_report(b.report, ReportFormat::Json));
}

TEST_CASE("sink command reports the S3 example") {
    RunResult r = run_command({"sink", "--group", "catalog:S3", "--element", "(1 2)"});
    CHECK(r.exit_code == 0);
    REQUIRE(!r.report.checks.empty());
    CHECK(r.report.checks[0].details.find("sink size 3") != std::string::npos);
}

TEST_CASE("vandermonde command carries the solved coefficients") {
    RunResult r = run_command({"vandermonde", "--k", "2", "--p", "3", "--m", "1", "--T", "50"});
    CHECK(r.exit_code == 0);
    bool has = false;
    for (const auto& c : r.report.checks)
        if (c.details.find("4/3, -1/3") != std::string::npos) has = true;
    CHECK(has);
    REQUIRE(r.report.payload.is_array());
    CHECK(r.report.payload[0]["c_i"] == "4/3");
    CHECK(r.report.payload[1]["c_i"] == "-1/3");
}

TEST_CASE("unknown subcommand raises a usage error") {
    try {
        run_command({"frobnicate"});
        FAIL("expected UsageError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UsageError);
    }
}

TEST_CASE("empty reports are valid JSON with zero records") {
    Report rep;
    rep.version = "test";
    rep.seed_hex = "0x0";
    rep.command = "none";
    std::string out = emit_report(rep, ReportFormat::Json);
    auto parsed = OrderedJson::parse(out);
    CHECK(parsed["checks"].is_array());
    CHECK(parsed["checks"].empty());
    CHECK(parsed["summary"]["total"] == 0);
}

TEST_CASE("fail records carry their counterexample") {
    Report rep;
    rep.version = "test";
    rep.seed_hex = "0x0";
    rep.command = "none";
    OrderedJson cx;
    cx["group"] = "S3";
    rep.checks.push_back(fail_record("id", "anchor", "boom", cx));
    auto parsed = OrderedJson::parse(emit_report(rep, ReportFormat::Json));
    CHECK(parsed["checks"][0]["verdict"] == "FAIL");
    CHECK(parsed["checks"][0]["counterexample"]["group"] == "S3");
    CHECK(exit_code_for(rep) == 1);
}

TEST_CASE("repeated runs are byte-identical") {
    std::vector<std::string> args{"verify", "--suite", "actions", "--format", "json"};
    RunResult a = run_command(args);
    RunResult b = run_command(args);
    CHECK(emit_report(a.report, ReportFormat::Json) == emit_report(b.report, ReportFormat::Json));
}

TEST_CASE("scheduling does not leak into the output") {
    RunResult a = run_command({"verify", "--suite", "sinks", "--jobs", "1", "--format", "json"});
    RunResult b = run_command({"verify", "--suite", "sinks", "--jobs", "8", "--format", "json"});
    CHECK(a.exit_code == 0);
    CHECK(emit_report(a.report, ReportFormat::Json) == emit_report(b.report, ReportFormat::Json));
}

TEST_CASE("seed appears in the report") {
    RunResult r = run_command({"catalog", "list", "--seed", "ab12"});
    CHECK(r.report.seed_hex == "0xab12");
}

TEST_CASE("verify accepts spec files for --group and --action") {
    auto write_tmp = [](const std::string& path, const std::string& text) {
        std::ofstream out(path);
        out << text;
    };
    const std::string gfile = "/tmp/ewb_test_group.txt";
    write_tmp(gfile, "group D10\nkind permutation degree 5\ngen r = (1 2 3 4 5)\n"
                     "gen s = (2 5)(3 4)\nend\n");
    RunResult g = run_command({"verify", "--group", gfile});
    CHECK(g.exit_code == 0);
    bool saw_baer = false;
    for (const auto& c : g.report.checks)
        if (c.id == "sinks/D10/baer") saw_baer = true;
    CHECK(saw_baer);

    const std::string afile = "/tmp/ewb_test_action.txt";
    write_tmp(afile, "action inv_on_C5xC5 on C5xC5\nactor V4\nauto u: u -> u^-1\n"
                     "auto v: v -> v^-1\nend\n");
    RunResult a = run_command({"verify", "--action", afile});
    CHECK(a.exit_code == 0);
    bool saw_gen = false, saw_ward = false;
    for (const auto& c : a.report.checks) {
        if (c.id == "actions/inv_on_C5xC5/generation") saw_gen = c.verdict == Verdict::Pass;
        if (c.id == "theorems/inv_on_C5xC5/ward") saw_ward = c.verdict == Verdict::Pass;
    }
    CHECK(saw_gen);
    CHECK(saw_ward);
}

TEST_CASE("sink works on a group loaded from a file") {
    const std::string gfile = "/tmp/ewb_test_group2.txt";
    {
        std::ofstream out(gfile);
        out << "group K4\nkind permutation degree 4\ngen a = (1 2)\ngen b = (3 4)\nend\n";
    }
    RunResult r = run_command({"sink", "--group", gfile, "--element", "a b"});
    CHECK(r.exit_code == 0);
    CHECK(r.report.checks[0].details.find("sink size 1") != std::string::npos);
}

TEST_SUITE_END();
