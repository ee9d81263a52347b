#include "thresh2d/cli/verify.hpp"

#include "thresh2d/arrangement.hpp"
#include "thresh2d/teaching.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

namespace thresh2d::cli {

namespace {

// Size gates for the expensive definition-level checks.
constexpr int kBruteForceMaxCells = 16;
constexpr int kVerifyTeachingMaxCells = 16;
constexpr int kBijectionMaxSide = 6;

using Failure = std::optional<std::string>;

template <typename T>
std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string show(const PlaneStats& p) {
    return "c=" + p.c.str() + " c3=" + p.c3.str() + " c4=" + p.c4.str() + " e=" + p.e.str() + " v=" + p.v.str() +
           " v_inf=" + p.v_inf.str();
}

std::string show(const TriangleStats& t) {
    return "c=" + t.c.str() + " c3=" + t.c3.str() + " c4=" + t.c4.str() + " e=" + t.e.str() + " v=" + t.v.str();
}

std::string show(const UTable& u) {
    return "u01=" + u.at(0, 1).str() + " u02=" + u.at(0, 2).str() + " u11=" + u.at(1, 1).str() +
           " u12=" + u.at(1, 2).str();
}

template <typename A, typename B>
Failure expect_equal(const std::string& what, const A& observed, const B& expected) {
    if (observed == expected) return std::nullopt;
    return what + ": observed " + show(observed) + ", expected " + show(expected);
}

CountReport closed_report(const GridDims& d, const ClosedForms& forms) {
    CountReport r;
    r.f1 = forms.f1(d);
    r.f2 = forms.f2(d);
    r.s = forms.s(d);
    r.l = forms.l(d);
    r.t = forms.t(d);
    std::tie(r.t3, r.t4) = forms.t3_t4(d);
    r.sigma_bar = forms.sigma(d);
    r.u = forms.u(d);
    return r;
}

Failure run_check(const std::string& name, const GridDims& d, const ClosedForms& forms) {
    const int m = d.m();

    if (name == "formulas.invariants") {
        auto r = closed_report(d, forms);
        if (auto f = check_invariants(r)) return "count report: " + *f;
        if (auto f = check_invariants(forms.plane(d))) return "plane stats: " + *f;
        if (auto f = check_invariants(forms.triangle(d), d)) return "triangle stats: " + *f;
        if (r.t != r.f1 + 2) return "t != f1 + 2";
        return std::nullopt;
    }
    if (name == "formulas.s_identity") {
        return expect_equal("s(m,n) two ways", s_count_from_f1(d), forms.s(d));
    }
    if (name == "formulas.brute_force") {
        return expect_equal("brute-force threshold count vs t", BigInt(brute_force_threshold_count(d)), forms.t(d));
    }
    if (name == "formulas.enumeration") {
        return expect_equal("enumerated threshold functions vs t", BigInt(enumerate_threshold(d).size()), forms.t(d));
    }
    if (name == "teaching.aggregate") {
        auto e = aggregate(d);
        auto c = closed_report(d, forms);
        if (auto f = check_invariants(e)) return "empirical report: " + *f;
        if (auto f = expect_equal("t", e.t, c.t)) return f;
        if (auto f = expect_equal("t3", e.t3, c.t3)) return f;
        if (auto f = expect_equal("t4", e.t4, c.t4)) return f;
        if (auto f = expect_equal("sigma_bar", e.sigma_bar, c.sigma_bar)) return f;
        return expect_equal("u", e.u, c.u);
    }
    if (name == "teaching.structure") {
        auto census = teaching_census(d);
        for (std::size_t i = 0; i < census.functions.size(); ++i) {
            const auto& p = census.profiles[i];
            if (p.size != 3 && p.size != 4) {
                return "function " + census.functions[i].to_hex() + " has teaching set size " + std::to_string(p.size);
            }
            if (p.size == 4 && !census.functions[i].is_constant() && p.kappa != 2) {
                return "function " + census.functions[i].to_hex() + " has a size-4 set with " +
                       std::to_string(p.kappa) + " zeros";
            }
        }
        if (d.size() <= kVerifyTeachingMaxCells) {
            for (std::size_t i = 0; i < census.functions.size(); ++i) {
                const auto& f = census.functions[i];
                auto pts = census.profiles[i].point_set();
                if (!verify_teaching(f, pts, census.functions)) {
                    return "teaching set of " + f.to_hex() + " does not determine it";
                }
                for (std::size_t k = 0; k < pts.size(); ++k) {
                    auto fewer = pts;
                    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
                    if (verify_teaching(f, fewer, census.functions)) {
                        return "teaching set of " + f.to_hex() + " is not minimal";
                    }
                }
            }
        }
        return std::nullopt;
    }
    if (name == "teaching.essential_identity") {
        auto census = teaching_census(d);
        BigInt total = 0;
        for (int idx = 0; idx < d.size(); ++idx) {
            IntPoint p{idx % m, idx / m};
            auto h = census.essential_counts[static_cast<std::size_t>(idx)];
            auto l = lines_through_point(d, p);
            if (h != 4 * l) {
                return "point (" + std::to_string(p.x) + "," + std::to_string(p.y) + "): h=" + std::to_string(h) +
                       " but 4*l=" + std::to_string(4 * l);
            }
            total += h;
        }
        return expect_equal("sum of h(p) vs sigma * t", Rat(total), forms.sigma(d) * Rat(forms.t(d)));
    }
    if (name == "arrangement.plane") {
        auto geo = plane_arrangement(d);
        if (auto f = check_invariants(geo)) return "geometric plane stats: " + *f;
        auto arr = build_plane_arrangement(d);
        if (auto f = expect_equal("slope classes vs s+2", BigInt(arr.slope_classes), forms.s(d) + 2)) return f;
        return expect_equal("plane partition", geo, forms.plane(d));
    }
    if (name == "arrangement.triangle") {
        auto geo = triangle_arrangement(d);
        if (auto f = check_invariants(geo, d)) return "geometric triangle stats: " + *f;
        return expect_equal("triangle partition", geo, forms.triangle(d));
    }
    if (name == "arrangement.census") {
        auto [c3, c4] = cell_census(d);
        auto geo = plane_arrangement(d);
        auto closed = forms.plane(d);
        if (auto f = expect_equal("census c3 vs geometric", c3, geo.c3)) return f;
        if (auto f = expect_equal("census c4 vs geometric", c4, geo.c4)) return f;
        if (auto f = expect_equal("census c3 vs closed form", c3, closed.c3)) return f;
        return expect_equal("census c4 vs closed form", c4, closed.c4);
    }
    if (name == "arrangement.bijection") {
        for (const auto& f : enumerate_threshold(d)) {
            if (f(0, 0)) continue;
            if (irredundant_constraints(f) != teaching_set(f).point_set()) {
                return "function " + f.to_hex() + ": irredundant constraints differ from teaching set";
            }
        }
        return std::nullopt;
    }
    if (name == "identities.adjacency") {
        return expect_equal("adjacent ordered pairs vs f1", BigInt(adjacent_pairs_count(d)), forms.f1(d));
    }
    if (name == "identities.lines") {
        auto lines = grid_lines(d);
        if (auto f = expect_equal("distinct lines vs l", BigInt(lines.size()), forms.l(d))) return f;
        if (auto f = expect_equal("l vs (f1 - f2) / 2", 2 * forms.l(d), forms.f1(d) - forms.f2(d))) return f;
        BigInt adjacent = 0;
        std::int64_t incidences = 0;
        for (const auto& line : lines) {
            auto z = points_on_line(d, line);
            adjacent += z - 1;
            incidences += z;
        }
        if (auto f = expect_equal("2 * sum(z - 1) vs f1", 2 * adjacent, forms.f1(d))) return f;
        std::int64_t per_point = 0;
        for (int idx = 0; idx < d.size(); ++idx) per_point += lines_through_point(d, {idx % m, idx / m});
        return expect_equal("sum_p l(p) vs sum_l z(l)", per_point, incidences);
    }
    if (name == "identities.complement") {
        auto all = enumerate_threshold(d);
        for (const auto& f : all) {
            if (!std::binary_search(all.begin(), all.end(), f.complement())) {
                return "complement of " + f.to_hex() + " is missing";
            }
        }
        return std::nullopt;
    }
    return "unknown check " + name;
}

}  // namespace

bool VerifyReport::all_pass() const {
    return failures() == 0;
}

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

std::vector<std::string> checks_for(const std::string& suite, int m, int n) {
    if (suite == "formulas") {
        std::vector<std::string> out{"formulas.enumeration", "formulas.invariants", "formulas.s_identity"};
        if (m * n <= kBruteForceMaxCells) out.insert(out.begin(), "formulas.brute_force");
        return out;
    }
    if (suite == "teaching") {
        return {"teaching.aggregate", "teaching.essential_identity", "teaching.structure"};
    }
    if (suite == "arrangement") {
        std::vector<std::string> out{"arrangement.census", "arrangement.plane", "arrangement.triangle"};
        if (m <= kBijectionMaxSide && n <= kBijectionMaxSide) out.insert(out.begin(), "arrangement.bijection");
        return out;
    }
    if (suite == "identities") {
        return {"identities.complement", "identities.adjacency", "identities.lines"};
    }
    throw std::invalid_argument("unknown check suite '" + suite + "'");
}

VerifyReport run_verify(const VerifyOptions& options) {
    VerifyReport report;
    for (int m = 2; m <= options.max_m; ++m) {
        for (int n = 2; n <= options.max_n; ++n) {
            for (const auto& suite : options.suites) {
                for (const auto& name : checks_for(suite, m, n)) {
                    report.checks.push_back({name, m, n, true, {}, 0.0});
                }
            }
        }
    }
    std::sort(report.checks.begin(), report.checks.end(), [](const auto& a, const auto& b) {
        return std::tie(a.m, a.n, a.name) < std::tie(b.m, b.n, b.name);
    });

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < report.checks.size(); i = next++) {
            auto& c = report.checks[i];
            auto start = std::chrono::steady_clock::now();
            Failure failure;
            try {
                failure = run_check(c.name, GridDims(c.m, c.n), options.forms);
            } catch (const std::exception& e) {
                failure = std::string("exception: ") + e.what();
            }
            c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            if (failure) {
                c.pass = false;
                c.counterexample = "m=" + std::to_string(c.m) + " n=" + std::to_string(c.n) + ": " + *failure;
            }
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return report;
}

void write_report(std::ostream& os, const VerifyReport& report, bool timings) {
    for (const auto& c : report.checks) {
        os << (c.pass ? "PASS" : "FAIL") << ' ' << c.m << 'x' << c.n << ' ' << c.name;
        if (timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", c.elapsed_ms);
            os << " [" << buf << " ms]";
        }
        if (!c.pass) os << " -- " << c.counterexample;
        os << '\n';
    }
    os << report.checks.size() << " checks, " << report.failures() << " failed\n";
}

}  // namespace thresh2d::cli
