#pragma once

// Cross-verification sweep behind `thresh2d verify`.

#include "thresh2d/formulas.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace thresh2d::cli {

/// Closed forms the sweep checks against. Tests swap entries for corrupted
/// versions to exercise the failure path.
struct ClosedForms {
    std::function<BigInt(const GridDims&)> f1 = [](const GridDims& d) { return f_sum(1, d); };
    std::function<BigInt(const GridDims&)> f2 = [](const GridDims& d) { return f_sum(2, d); };
    std::function<BigInt(const GridDims&)> s = s_count;
    std::function<BigInt(const GridDims&)> l = line_count;
    std::function<BigInt(const GridDims&)> t = t_count;
    std::function<std::pair<BigInt, BigInt>(const GridDims&)> t3_t4 = thresh2d::t3_t4;
    std::function<Rat(const GridDims&)> sigma = sigma_bar;
    std::function<UTable(const GridDims&)> u = u_counts;
    std::function<PlaneStats(const GridDims&)> plane = plane_stats_formula;
    std::function<TriangleStats(const GridDims&)> triangle = triangle_stats_formula;
};

struct CheckResult {
    std::string name;
    int m = 0;
    int n = 0;
    bool pass = true;
    std::string counterexample;  // non-empty iff !pass
    double elapsed_ms = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;  // ordered by (m, n, name)

    bool all_pass() const;
    std::size_t failures() const;
};

/// Check suites accepted by --checks.
inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"formulas", "teaching", "arrangement", "identities"};
    return names;
}

struct VerifyOptions {
    int max_m = 4;
    int max_n = 4;
    std::set<std::string> suites{"formulas", "teaching", "arrangement", "identities"};
    int jobs = 1;
    ClosedForms forms;
};

/// Names of the checks a suite runs on an m x n grid (some are size-gated).
std::vector<std::string> checks_for(const std::string& suite, int m, int n);

/// Runs every selected check on every 2 <= m <= max_m, 2 <= n <= max_n.
/// Check failures and exceptions become report entries, never crashes.
VerifyReport run_verify(const VerifyOptions& options);

/// One line per check, then a summary line. Timings only when requested.
void write_report(std::ostream& os, const VerifyReport& report, bool timings);

}  // namespace thresh2d::cli
