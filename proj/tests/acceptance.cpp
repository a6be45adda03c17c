// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1] (optional) is the path to the CLI binary, used by the
// determinism criterion.

#include "ewb/catalog.hpp"
#include "ewb/engel.hpp"
#include "ewb/lie_series.hpp"
#include "ewb/nilpotent_model.hpp"
#include "ewb/report.hpp"
#include "ewb/suites.hpp"
#include "ewb/vandermonde.hpp"

#include "oracles.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace ewb;

namespace {

int failures = 0;

void criterion(const std::string& id, const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        std::cout << "[PASS] " << id << (detail.empty() ? "" : ": " + detail) << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "[FAIL] " << id << ": " << e.what() << "\n";
    }
    std::cout.flush();
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

std::string run_suite_and_count(const std::vector<std::string>& names) {
    SuiteContext ctx;
    std::vector<CheckUnit> units;
    for (const auto& s : names)
        for (auto& u : suite_units(s, ctx)) units.push_back(std::move(u));
    auto records = run_units(std::move(units), 1);
    int pass = 0, vacuous = 0, skipped = 0;
    for (const auto& r : records) {
        if (r.verdict == Verdict::Fail)
            throw std::runtime_error("check failed: " + r.id + " (" + r.details + ")");
        if (r.verdict == Verdict::Pass) ++pass;
        if (r.verdict == Verdict::Vacuous) ++vacuous;
        if (r.verdict == Verdict::Skipped) ++skipped;
    }
    std::ostringstream os;
    os << pass << " pass";
    if (vacuous) os << ", " << vacuous << " vacuous";
    if (skipped) os << ", " << skipped << " skipped";
    return os.str();
}

std::string capture_command(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot spawn: " + cmd);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    if (rc != 0) throw std::runtime_error("nonzero exit from: " + cmd);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli_path = argc > 1 ? argv[1] : "";

    // 1. BCH exactness at weight 3: 1/2, 1/12, -1/12 on the stated monomials
    criterion("criterion-1 bch-exactness", [] {
        const LieSeries& phi = bch_series(3);
        LieSeries x = lie_letter("XY", 3, 0);
        LieSeries y = lie_letter("XY", 3, 1);
        LieSeries xy = lie_bracket(x, y);
        require(weight_part(phi, 1) == lie_add(x, y), "weight-1 part is not X + Y");
        require(weight_part(phi, 2) == lie_scale(Rat(1, 2), xy),
                "weight-2 coefficient is not 1/2");
        LieSeries expected3 = lie_add(lie_scale(Rat(1, 12), lie_bracket(xy, y)),
                                      lie_scale(Rat(-1, 12), lie_bracket(xy, x)));
        require(weight_part(phi, 3) == expected3,
                "weight-3 part is not (1/12)[[X,Y],Y] - (1/12)[[X,Y],X]");
        return std::string("1/2, 1/12, -1/12 reproduced exactly");
    });

    // 2. free-Lie dimensions, 2 letters, weights 1..6, oracle authoritative
    criterion("criterion-2 free-lie-dimensions", [] {
        const auto& basis = LyndonBasis::get(2, 6);
        std::ostringstream os;
        for (int w = 1; w <= 6; ++w) {
            int oracle = oracles::brute_force_lie_dimension(2, w);
            require(basis.count_of_weight(w) == oracle,
                    "Lyndon count differs from the brute-force rank at weight " +
                        std::to_string(w));
            os << (w > 1 ? "," : "") << oracle;
        }
        require(std::string("2,1,2,3,6,9") == os.str(),
                "oracle ranks moved away from 2,1,2,3,6,9");
        return "counts " + os.str();
    });

    // 3. Vandermonde lemma grid
    criterion("criterion-3 vandermonde-grid", [] {
        int systems = 0;
        for (int k = 1; k <= 6; ++k)
            for (int p : {2, 3, 5})
                for (int m = 1; m <= 2; ++m) {
                    VandermondeSystem sys = solve_system(k, p, m);
                    beta_sequence(sys, 50);   // throws on any non-p-integer
                    valuation_checks(sys, 12); // throws on any formula mismatch
                    ++systems;
                }
        return std::to_string(systems) + " systems, zero violations";
    });

    // 4. linearization identity grid at W = 6
    criterion("criterion-4 linearization-identity", [] {
        int runs = 0;
        for (int l : {1, 2})
            for (int k : {2, 3})
                for (int p : {3, 5}) {
                    linearization_identity_check(l, k, p, 1, 6);
                    ++runs;
                }
        return std::to_string(runs) + " configurations, zero residual";
    });

    // 5. Engel-sink suite over the catalog
    criterion("criterion-5 engel-sink-suite", [] { return run_suite_and_count({"sinks"}); });

    // 6. action-lemma suite
    criterion("criterion-6 action-lemma-suite", [] { return run_suite_and_count({"actions"}); });

    // 7. coprime-sink suite
    criterion("criterion-7 coprime-sink-suite",
              [] { return run_suite_and_count({"coprime-sinks"}); });

    // 8. Zassenhaus suite
    criterion("criterion-8 zassenhaus-suite",
              [] { return run_suite_and_count({"zassenhaus"}); });

    // 9. scaled-model group axioms, powers, and valuation bounds
    criterion("criterion-9 scaled-model", [] { return run_suite_and_count({"model"}); });

    // 10. byte-identical verify --all output across runs and thread counts
    criterion("criterion-10 determinism", [&cli_path] {
        if (cli_path.empty())
            throw std::runtime_error("CLI path not supplied (argv[1])");
        std::string base = "'" + cli_path + "' verify --all --format json";
        std::string a = capture_command(base + " --jobs 1");
        std::string b = capture_command(base + " --jobs 1");
        std::string c = capture_command(base + " --jobs 8");
        require(!a.empty(), "empty output");
        require(a == b, "two consecutive runs differ");
        require(a == c, "--jobs 1 and --jobs 8 outputs differ");
        return std::to_string(a.size()) + " bytes, identical across 3 runs";
    });

    if (failures == 0) std::cout << "acceptance: all criteria passed\n";
    else std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
