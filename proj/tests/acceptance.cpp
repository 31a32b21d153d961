// Acceptance gate: one line per criterion, each a suite run with a pinned
// parameterization and wall-clock limit. Exits nonzero if any line fails.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "minorclique/suites.hpp"

namespace {

struct Criterion {
    std::string label;
    std::vector<std::pair<std::string, minorclique::SuiteOptions>> runs;
    double limit_seconds = 0;
    std::optional<std::uint64_t> expected_instances;  // of the first run
};

minorclique::SuiteOptions opts(std::optional<int> n = {}, std::optional<int> max_n = {},
                               std::optional<int> t = {}, std::optional<int> max_shape = {}) {
    minorclique::SuiteOptions o;
    o.n = n;
    o.max_n = max_n;
    o.t = t;
    o.max_shape = max_shape;
    return o;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"census-oracle n=6", {{"census-oracle", opts(6)}}, 60.0, 32768},
        {"shape-counts a,b<=5", {{"shape-counts", opts({}, {}, {}, 5)}}, 5.0, 36},
        {"k-s-bound n<=7", {{"k-s-bound", opts({}, 7)}}, 900.0, {}},
        {"hadwiger-dense m<=4", {{"hadwiger-dense", opts({}, 4)}}, 300.0, {}},
        {"shape-predicate h<=6 a,b<=4", {{"shape-predicate", opts({}, 6, {}, 4)}}, 1800.0, {}},
        {"wood-small full table", {{"wood-small", opts()}}, 1200.0, {}},
        {"envelope-example t=2,3", {{"envelope-example", opts()}}, 1.0, {}},
        {"ip-lp-gap t<=60", {{"ip-lp-gap", opts({}, 60)}}, 10.0, {}},
        {"small-n t=6 n=7", {{"small-n", opts(7, {}, 6)}}, 120.0, {}},
        {"independent-fraction + social-structure n<=6",
         {{"independent-fraction", opts({}, 6)}, {"social-structure", opts({}, 6)}},
         1800.0,
         {}},
        {"union-dp n<=10", {{"union-dp", opts({}, 10)}}, 300.0, {}},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        bool ok = true;
        double wall = 0;
        std::uint64_t instances = 0;
        std::string detail;
        try {
            for (std::size_t j = 0; j < c.runs.size(); ++j) {
                minorclique::VerificationResult r =
                    minorclique::run_suite(c.runs[j].first, c.runs[j].second);
                wall += r.wall_seconds;
                instances += r.instances;
                if (!r.passed) {
                    ok = false;
                    detail = r.suite + ": " + r.counterexample;
                    break;
                }
                if (j == 0 && c.expected_instances && r.instances != *c.expected_instances) {
                    ok = false;
                    detail = r.suite + ": " + std::to_string(r.instances) +
                             " instances, expected " + std::to_string(*c.expected_instances);
                    break;
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        if (ok && wall > c.limit_seconds) {
            ok = false;
            detail = "exceeded time limit";
        }
        std::printf("criterion %2zu: %-46s %s  (%llu instances, %.2fs, limit %.0fs)\n", i + 1,
                    c.label.c_str(), ok ? "PASS" : "FAIL",
                    static_cast<unsigned long long>(instances), wall, c.limit_seconds);
        if (!ok) {
            std::printf("              %s\n", detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
