#include "thresh2d/cli/commands.hpp"

#include "thresh2d/cli/verify.hpp"
#include "thresh2d/teaching.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace thresh2d::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSigmaDigits = 12;
constexpr int kEnumerateMaxCells = 400;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

// Column name -> value, in the fixed column order.
using Row = std::vector<std::pair<std::string, BigInt>>;

Row count_row(const GridDims& d, const std::vector<std::string>& quantities, std::optional<Rat>& sigma) {
    Row row{{"m", d.m()}, {"n", d.n()}};
    std::optional<CountReport> report;
    auto rep = [&]() -> const CountReport& {
        if (!report) report = count_report(d);
        return *report;
    };
    for (const auto& q : quantity_names()) {
        if (std::find(quantities.begin(), quantities.end(), q) == quantities.end()) continue;
        if (q == "f1") row.emplace_back("f1", rep().f1);
        if (q == "f2") row.emplace_back("f2", rep().f2);
        if (q == "s") row.emplace_back("s", rep().s);
        if (q == "l") row.emplace_back("l", rep().l);
        if (q == "t") row.emplace_back("t", rep().t);
        if (q == "t3") row.emplace_back("t3", rep().t3);
        if (q == "t4") row.emplace_back("t4", rep().t4);
        if (q == "sigma") {
            sigma = rep().sigma_bar;
            row.emplace_back("sigma_num", sigma->num());
            row.emplace_back("sigma_den", sigma->den());
        }
        if (q == "u") {
            const auto& u = rep().u;
            row.emplace_back("u01", u.at(0, 1));
            row.emplace_back("u02", u.at(0, 2));
            row.emplace_back("u11", u.at(1, 1));
            row.emplace_back("u12", u.at(1, 2));
        }
        if (q == "plane") {
            auto p = plane_stats_formula(d);
            for (auto& [k, v] : Row{{"c", p.c}, {"c3", p.c3}, {"c4", p.c4}, {"e", p.e}, {"v", p.v}, {"v_inf", p.v_inf}})
                row.emplace_back(k, v);
        }
        if (q == "triangle") {
            auto t = triangle_stats_formula(d);
            for (auto& [k, v] : Row{{"tc", t.c}, {"tc3", t.c3}, {"tc4", t.c4}, {"te", t.e}, {"tv", t.v}})
                row.emplace_back(k, v);
        }
    }
    return row;
}

Json profile_json(const TeachingProfile& p) {
    Json pts = Json::array();
    for (const auto& tp : p.points) {
        pts.push_back(Json{{"x", tp.point.x}, {"y", tp.point.y}, {"value", tp.value}});
    }
    return pts;
}

std::string show_point(const IntPoint& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Runs `body` against --output (if given) or `out`.
template <typename Body>
int with_output(const std::string& path, std::ostream& out, Body&& body) {
    if (path.empty()) {
        return body(out);
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open " + path + " for writing");
    }
    int code = body(file);
    if (!file.flush()) {
        throw UsageError("failed writing " + path);
    }
    return code;
}

Side parse_side(const std::string& s) {
    if (s == "le") return Side::le;
    if (s == "gt") return Side::gt;
    throw UsageError("--side must be 'le' or 'gt'");
}

}  // namespace

const std::vector<std::string>& quantity_names() {
    static const std::vector<std::string> names{"f1", "f2", "s",  "l", "t", "t3",
                                                "t4", "sigma", "u", "plane", "triangle"};
    return names;
}

std::vector<std::string> columns_for(const std::string& quantity) {
    if (quantity == "sigma") return {"sigma_num", "sigma_den"};
    if (quantity == "u") return {"u01", "u02", "u11", "u12"};
    if (quantity == "plane") return {"c", "c3", "c4", "e", "v", "v_inf"};
    if (quantity == "triangle") return {"tc", "tc3", "tc4", "te", "tv"};
    if (std::find(quantity_names().begin(), quantity_names().end(), quantity) != quantity_names().end()) {
        return {quantity};
    }
    throw UsageError("unknown quantity '" + quantity + "'");
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> values;
    for (const auto& part : split(text, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size()) {
            throw UsageError("not an integer: '" + part + "'");
        }
        values.push_back(v);
    }
    return values;
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rat(parse_int_list(text).at(0));
    }
    auto num = parse_int_list(text.substr(0, slash));
    auto den = parse_int_list(text.substr(slash + 1));
    if (num.size() != 1 || den.size() != 1 || den[0] == 0) {
        throw UsageError("not a rational: '" + text + "'");
    }
    return Rat(BigInt(num[0]), BigInt(den[0]));
}

int cmd_count(const CountArgs& args, std::ostream& out) {
    GridDims d(args.m, args.n);
    std::vector<std::string> quantities = args.quantities.empty() ? quantity_names() : args.quantities;
    for (const auto& q : quantities) columns_for(q);  // validates names

    std::optional<Rat> sigma;
    Row row = count_row(d, quantities, sigma);
    if (args.format == Format::csv) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].first;
        out << '\n';
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].second.str();
        out << '\n';
    } else {
        Json j;
        for (const auto& [k, v] : row) j[k] = to_json(v);
        if (sigma) j["sigma_decimal"] = sigma->decimal(kSigmaDigits);
        out << j.dump() << '\n';
    }
    return kSuccess;
}

int cmd_enumerate(int m, int n, std::ostream& out) {
    GridDims d(m, n);
    if (d.size() > kEnumerateMaxCells) {
        throw UsageError("enumerate supports m*n <= " + std::to_string(kEnumerateMaxCells));
    }
    auto census = teaching_census(d);
    for (std::size_t i = 0; i < census.functions.size(); ++i) {
        const auto& p = census.profiles[i];
        Json rec{{"m", m},
                 {"n", n},
                 {"bits", census.functions[i].to_hex()},
                 {"teaching", profile_json(p)},
                 {"size", p.size},
                 {"nu", p.nu},
                 {"kappa", p.kappa}};
        out << rec.dump() << '\n';
    }
    auto r = aggregate(census);
    Json summary{{"m", m},
                 {"n", n},
                 {"t", to_json(r.t)},
                 {"t3", to_json(r.t3)},
                 {"t4", to_json(r.t4)},
                 {"sigma_num", to_json(r.sigma_bar.num())},
                 {"sigma_den", to_json(r.sigma_bar.den())},
                 {"u01", to_json(r.u.at(0, 1))},
                 {"u02", to_json(r.u.at(0, 2))},
                 {"u11", to_json(r.u.at(1, 1))},
                 {"u12", to_json(r.u.at(1, 2))}};
    out << Json{{"summary", summary}}.dump() << '\n';
    return kSuccess;
}

int cmd_teach(const TeachArgs& args, std::ostream& out) {
    GridDims d(args.m, args.n);
    if (args.a1 == 0 && args.a2 == 0) {
        throw UsageError("degenerate line: a1 and a2 are both zero");
    }
    auto f = from_coefficients(args.a0, args.a1, args.a2, d, args.side);
    auto p = teaching_set(f);
    if (args.json) {
        Json j{{"m", args.m}, {"n", args.n}, {"bits", f.to_hex()}, {"teaching", profile_json(p)},
               {"size", p.size}, {"nu", p.nu}, {"kappa", p.kappa}};
        out << j.dump() << '\n';
        return kSuccess;
    }
    out << "function " << f.to_hex() << " on " << args.m << "x" << args.n << '\n';
    out << "teaching set: size=" << p.size << " nu=" << p.nu << " kappa=" << p.kappa << '\n';
    for (const auto& tp : p.points) {
        out << "  " << show_point(tp.point) << " -> " << tp.value << '\n';
    }
    return kSuccess;
}

int cmd_arrange(const ArrangeArgs& args, std::ostream& out) {
    GridDims d(args.m, args.n);
    std::vector<std::pair<std::string, std::pair<BigInt, BigInt>>> rows;
    if (args.mode == ArrangementMode::plane) {
        auto g = plane_arrangement(d);
        auto f = plane_stats_formula(d);
        rows = {{"c", {g.c, f.c}}, {"c3", {g.c3, f.c3}}, {"c4", {g.c4, f.c4}},
                {"e", {g.e, f.e}}, {"v", {g.v, f.v}},    {"v_inf", {g.v_inf, f.v_inf}}};
    } else {
        auto g = triangle_arrangement(d);
        auto f = triangle_stats_formula(d);
        rows = {{"c", {g.c, f.c}}, {"c3", {g.c3, f.c3}}, {"c4", {g.c4, f.c4}}, {"e", {g.e, f.e}}, {"v", {g.v, f.v}}};
    }
    if (args.svg_path) {
        SvgOptions opts;
        opts.viewport = args.viewport;
        try {
            emit_arrangement_svg(d, args.mode, *args.svg_path, opts);
        } catch (const std::runtime_error& e) {
            throw UsageError(e.what());
        }
    }
    out << (args.mode == ArrangementMode::plane ? "plane" : "triangle") << " partition " << args.m << "x" << args.n
        << '\n';
    out << "quantity,geometric,formula\n";
    bool match = true;
    for (const auto& [name, values] : rows) {
        out << name << ',' << values.first.str() << ',' << values.second.str() << '\n';
        match = match && values.first == values.second;
    }
    out << (match ? "MATCH" : "MISMATCH") << '\n';
    return match ? kSuccess : kFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact combinatorics of two-dimensional threshold functions"};
    app.require_subcommand(1);

    int m = 0, n = 0, max_m = 4, max_n = 4, jobs = 1;
    std::string quantities, format = "csv", output, line, side = "le", mode = "plane", svg, viewport;
    std::string checks = "all";
    bool json = false, timings = false;

    auto* count = app.add_subcommand("count", "Closed-form quantities for one grid");
    count->add_option("--m", m, "Grid width (>= 2)")->required();
    count->add_option("--n", n, "Grid height (>= 2)")->required();
    count->add_option("--quantities", quantities, "Comma list of f1,f2,s,l,t,t3,t4,sigma,u,plane,triangle");
    count->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    count->add_option("--output", output, "Write to a file instead of standard output");

    auto* enumerate = app.add_subcommand("enumerate", "Dump every threshold function with its teaching set (JSONL)");
    enumerate->add_option("--m", m, "Grid width (>= 2)")->required();
    enumerate->add_option("--n", n, "Grid height (>= 2)")->required();
    enumerate->add_option("--output", output, "Write to a file instead of standard output");

    auto* teach = app.add_subcommand("teach", "Minimal teaching set of the function cut by a line");
    teach->add_option("--m", m, "Grid width (>= 2)")->required();
    teach->add_option("--n", n, "Grid height (>= 2)")->required();
    teach->add_option("--line", line, "Coefficients a0,a1,a2 of a1*x1 + a2*x2 = a0")->required();
    teach->add_option("--side", side, "le: zeros where a1*x1 + a2*x2 <= a0; gt: zeros where > a0");
    teach->add_flag("--json", json, "Emit JSON instead of text");

    auto* arrange = app.add_subcommand("arrange", "Geometric vs closed-form partition counts");
    arrange->add_option("--m", m, "Grid width (>= 2)")->required();
    arrange->add_option("--n", n, "Grid height (>= 2)")->required();
    arrange->add_option("--mode", mode, "plane or triangle")->check(CLI::IsMember({"plane", "triangle"}));
    arrange->add_option("--svg", svg, "Also write an SVG drawing to this path");
    arrange->add_option("--viewport", viewport, "Plane mode SVG viewport xmin,xmax,ymin,ymax (integers or p/q)");

    auto* verify = app.add_subcommand("verify", "Run the cross-verification sweep");
    verify->add_option("--max-m", max_m, "Largest grid width")->required();
    verify->add_option("--max-n", max_n, "Largest grid height")->required();
    verify->add_option("--checks", checks, "all, or a comma list of formulas,teaching,arrangement,identities");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--output", output, "Write the report to a file");
    verify->add_flag("--timings", timings, "Include per-check elapsed time (not byte-stable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*count) {
            CountArgs a{m, n, {}, format == "json" ? Format::json : Format::csv};
            if (!quantities.empty()) a.quantities = split(quantities, ',');
            return with_output(output, out, [&](std::ostream& os) { return cmd_count(a, os); });
        }
        if (*enumerate) {
            GridDims check(m, n);
            return with_output(output, out, [&](std::ostream& os) { return cmd_enumerate(m, n, os); });
        }
        if (*teach) {
            auto coeffs = parse_int_list(line);
            if (coeffs.size() != 3) throw UsageError("--line expects a0,a1,a2");
            TeachArgs a{m, n, coeffs[0], coeffs[1], coeffs[2], parse_side(side), json};
            return cmd_teach(a, out);
        }
        if (*arrange) {
            ArrangeArgs a{m, n, mode == "plane" ? ArrangementMode::plane : ArrangementMode::triangle, {}, {}};
            if (!svg.empty()) a.svg_path = svg;
            if (!viewport.empty()) {
                auto parts = split(viewport, ',');
                if (parts.size() != 4) throw UsageError("--viewport expects xmin,xmax,ymin,ymax");
                a.viewport = Viewport{parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2]), parse_rat(parts[3])};
            }
            return cmd_arrange(a, out);
        }
        if (*verify) {
            GridDims check(max_m, max_n);
            VerifyOptions opts;
            opts.max_m = max_m;
            opts.max_n = max_n;
            opts.jobs = jobs;
            if (checks != "all") {
                opts.suites.clear();
                for (const auto& s : split(checks, ',')) {
                    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
                        throw UsageError("unknown check suite '" + s + "'");
                    }
                    opts.suites.insert(s);
                }
            }
            auto report = run_verify(opts);
            return with_output(output, out, [&](std::ostream& os) {
                write_report(os, report, timings);
                return report.all_pass() ? kSuccess : kFailure;
            });
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("thresh2d");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace thresh2d::cli
