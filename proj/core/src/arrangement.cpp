#include "thresh2d/arrangement.hpp"

#include "thresh2d/teaching.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace thresh2d {

namespace {

std::vector<IntPoint> nonzero_points(const GridDims& dims) {
    std::vector<IntPoint> pts;
    for (int y = 0; y < dims.n(); ++y) {
        for (int x = 0; x < dims.m(); ++x) {
            if (x != 0 || y != 0) pts.push_back({x, y});
        }
    }
    return pts;
}

bool within(const Rat& v, const Rat& a, const Rat& b) {
    return a <= b ? (a <= v && v <= b) : (b <= v && v <= a);
}

// Counts distinct points per owner from (point, owner) incidences.
std::vector<std::int64_t> distinct_per_owner(std::vector<std::pair<RatPoint, int>> inc, std::size_t owners) {
    std::sort(inc.begin(), inc.end(), [](const auto& l, const auto& r) {
        if (l.second != r.second) return l.second < r.second;
        return l.first < r.first;
    });
    inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
    std::vector<std::int64_t> counts(owners, 0);
    for (const auto& [pt, owner] : inc) {
        ++counts[static_cast<std::size_t>(owner)];
    }
    return counts;
}

// Fraction with int64 parts and a positive denominator; compared exactly.
struct Bound {
    std::int64_t num;
    std::int64_t den;

    friend bool operator<(const Bound& l, const Bound& r) {
        return static_cast<__int128>(l.num) * r.den < static_cast<__int128>(r.num) * l.den;
    }
};

Bound make_bound(std::int64_t num, std::int64_t den) {
    return den < 0 ? Bound{-num, -den} : Bound{num, den};
}

void require_cell_function(const BinaryGridFunction& f, const char* where) {
    if (f(0, 0)) {
        throw std::invalid_argument(std::string(where) + ": requires f(0,0) = 0");
    }
    if (!is_threshold(f)) {
        throw std::invalid_argument(std::string(where) + ": function is not threshold");
    }
}

// Hull of zeros \ {0} together with the negated ones. The origin's position
// relative to it decides the recession cone of the a0 = 1 cell.
std::vector<IntPoint> recession_witness_hull(const BinaryGridFunction& f) {
    std::vector<IntPoint> u;
    for (int i = 1; i < f.dims().size(); ++i) {
        IntPoint p = f.point(i);
        u.push_back(f.bit(i) ? IntPoint{-p.x, -p.y} : p);
    }
    return convex_hull(std::move(u));
}

}  // namespace

PlaneArrangement build_plane_arrangement(const GridDims& dims) {
    PlaneArrangement arr;
    const auto pts = nonzero_points(dims);
    for (const auto& p : pts) {
        arr.lines.emplace_back(1, p.x, p.y);
    }

    std::vector<std::pair<RatPoint, int>> incidences;
    for (std::size_t i = 0; i < arr.lines.size(); ++i) {
        for (std::size_t j = i + 1; j < arr.lines.size(); ++j) {
            auto hit = line_intersection(arr.lines[i], arr.lines[j]);
            if (hit.kind == LineIntersection::Kind::point) {
                incidences.emplace_back(hit.point, static_cast<int>(i));
                incidences.emplace_back(hit.point, static_cast<int>(j));
                arr.vertices.push_back(hit.point);
            }
        }
    }
    std::sort(arr.vertices.begin(), arr.vertices.end());
    arr.vertices.erase(std::unique(arr.vertices.begin(), arr.vertices.end()), arr.vertices.end());
    arr.per_line_vertex_counts = distinct_per_owner(std::move(incidences), arr.lines.size());

    std::vector<IntPoint> directions;
    for (const auto& p : pts) {
        std::int64_t g = gcd(p.x, p.y);
        directions.push_back({p.x / g, p.y / g});
    }
    std::sort(directions.begin(), directions.end());
    arr.slope_classes = std::unique(directions.begin(), directions.end()) - directions.begin();
    return arr;
}

PlaneStats plane_arrangement(const GridDims& dims) {
    const auto arr = build_plane_arrangement(dims);
    PlaneStats s;
    s.v = static_cast<std::int64_t>(arr.vertices.size());
    for (auto k : arr.per_line_vertex_counts) {
        s.e += k + 1;
    }
    s.c = 1 + s.e - s.v;
    s.v_inf = arr.slope_classes;
    s.c3 = 4 * s.c - 2 * s.e - 2 * s.v_inf;
    s.c4 = s.c - s.c3;
    return s;
}

TriangleArrangement build_triangle_arrangement(const GridDims& dims) {
    TriangleArrangement arr;
    std::vector<Line> support;
    for (int x1 = 1; x1 <= dims.m(); ++x1) {
        for (int x2 = 1; x2 <= dims.n(); ++x2) {
            arr.segments.push_back({{Rat(0), Rat(1, x2)}, {Rat(1, x1), Rat(0)}, false});
            support.emplace_back(1, x1, x2);
        }
    }
    arr.segments.push_back({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, true});
    support.emplace_back(0, 0, 1);
    arr.segments.push_back({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, true});
    support.emplace_back(0, 1, 0);

    std::vector<std::pair<RatPoint, int>> incidences;
    for (std::size_t i = 0; i < arr.segments.size(); ++i) {
        incidences.emplace_back(arr.segments[i].a, static_cast<int>(i));
        incidences.emplace_back(arr.segments[i].b, static_cast<int>(i));
        arr.vertex_points.push_back(arr.segments[i].a);
        arr.vertex_points.push_back(arr.segments[i].b);
    }
    for (std::size_t i = 0; i < arr.segments.size(); ++i) {
        for (std::size_t j = i + 1; j < arr.segments.size(); ++j) {
            auto hit = line_intersection(support[i], support[j]);
            if (hit.kind != LineIntersection::Kind::point) {
                continue;
            }
            const auto& p = hit.point;
            const auto& si = arr.segments[i];
            const auto& sj = arr.segments[j];
            if (within(p.x, si.a.x, si.b.x) && within(p.y, si.a.y, si.b.y) &&
                within(p.x, sj.a.x, sj.b.x) && within(p.y, sj.a.y, sj.b.y)) {
                incidences.emplace_back(p, static_cast<int>(i));
                incidences.emplace_back(p, static_cast<int>(j));
                arr.vertex_points.push_back(p);
            }
        }
    }
    std::sort(arr.vertex_points.begin(), arr.vertex_points.end());
    arr.vertex_points.erase(std::unique(arr.vertex_points.begin(), arr.vertex_points.end()),
                            arr.vertex_points.end());
    arr.vertices = static_cast<std::int64_t>(arr.vertex_points.size());
    for (auto k : distinct_per_owner(std::move(incidences), arr.segments.size())) {
        arr.edges += k - 1;
    }
    arr.cells = 1 + arr.edges - arr.vertices;
    return arr;
}

TriangleStats triangle_arrangement(const GridDims& dims) {
    const auto arr = build_triangle_arrangement(dims);
    TriangleStats s;
    s.v = arr.vertices;
    s.e = arr.edges;
    s.c = arr.cells;
    s.c3 = 4 * s.c - (2 * s.e - dims.m() - dims.n() - 1);
    s.c4 = s.c - s.c3;
    return s;
}

std::pair<BigInt, BigInt> cell_census(const GridDims& dims) {
    BigInt c3 = 0;
    BigInt c4 = 0;
    for (const auto& f : enumerate_threshold(dims)) {
        if (f(0, 0)) continue;
        int size = teaching_set(f).size;
        if (size == 3) c3 += 1;
        if (size == 4) c4 += 1;
    }
    return {c3, c4};
}

std::vector<IntPoint> irredundant_constraints(const BinaryGridFunction& f) {
    require_cell_function(f, "irredundant_constraints");
    const GridDims& dims = f.dims();
    std::vector<IntPoint> out;

    // 0 <= a0: a facet iff some direction d has d.x < 0 on zeros and d.x > 0 on ones.
    if (locate_in_hull(recession_witness_hull(f), {0, 0}) == HullLocation::outside) {
        out.push_back({0, 0});
    }

    // Constraint p: restrict the closed cell to the line a.p = 1, parametrized as
    // a(s) = (p + s * perp(p)) / |p|^2, and test for a non-degenerate interval.
    for (int ip = 1; ip < dims.size(); ++ip) {
        const IntPoint p = f.point(ip);
        const std::int64_t norm = p.x * p.x + p.y * p.y;
        std::optional<Bound> lower;
        std::optional<Bound> upper;
        bool feasible = true;
        for (int ix = 1; ix < dims.size() && feasible; ++ix) {
            if (ix == ip) continue;
            const IntPoint x = f.point(ix);
            const bool one = f.bit(ix);
            const std::int64_t alpha = -p.y * x.x + p.x * x.y;
            const std::int64_t beta = norm - (p.x * x.x + p.y * x.y);
            // zero: s * alpha <= beta;  one: s * alpha >= beta
            if (alpha == 0) {
                feasible = one ? beta <= 0 : beta >= 0;
                continue;
            }
            Bound b = make_bound(beta, alpha);
            bool is_upper = (alpha > 0) != one;
            if (is_upper) {
                if (!upper || b < *upper) upper = b;
            } else {
                if (!lower || *lower < b) lower = b;
            }
        }
        if (feasible && (!lower || !upper || *lower < *upper)) {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), row_major_less);
    return out;
}

std::vector<CellDescriptor> cell_descriptors(const GridDims& dims) {
    std::vector<CellDescriptor> out;
    for (const auto& f : enumerate_threshold(dims)) {
        if (f(0, 0)) continue;
        CellDescriptor d{f, static_cast<int>(irredundant_constraints(f).size()), false};
        d.bounded = locate_in_hull(recession_witness_hull(f), {0, 0}) == HullLocation::interior;
        out.push_back(std::move(d));
    }
    return out;
}

namespace {

class SvgCanvas {
public:
    SvgCanvas(const Viewport& vp, int pixels) : vp_(vp), pixels_(pixels) {
        os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\"" << pixels
            << "\" viewBox=\"0 0 " << pixels << ' ' << pixels << "\">\n"
            << "<rect x=\"0\" y=\"0\" width=\"" << pixels << "\" height=\"" << pixels
            << "\" fill=\"white\"/>\n";
    }

    void title(const std::string& text) { os_ << "<title>" << text << "</title>\n"; }

    void segment(const std::string& cls, const RatPoint& a, const RatPoint& b, const char* style) {
        os_ << "<line class=\"" << cls << "\" x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\""
            << px(b.x) << "\" y2=\"" << py(b.y) << "\" " << style << "/>\n";
    }

    void vertex(const RatPoint& p) {
        os_ << "<circle class=\"vertex\" cx=\"" << px(p.x) << "\" cy=\"" << py(p.y)
            << "\" r=\"3\" fill=\"black\"/>\n";
    }

    std::string finish() {
        os_ << "</svg>\n";
        return os_.str();
    }

private:
    std::string fmt(double v) const {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return buf;
    }
    std::string px(const Rat& x) const {
        return fmt(((x - vp_.xmin) / (vp_.xmax - vp_.xmin)).to_double() * pixels_);
    }
    std::string py(const Rat& y) const {
        return fmt(((vp_.ymax - y) / (vp_.ymax - vp_.ymin)).to_double() * pixels_);
    }

    Viewport vp_;
    int pixels_;
    std::ostringstream os_;
};

Viewport default_viewport(const std::vector<RatPoint>& vertices) {
    Rat xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const auto& v : vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    Rat span = std::max({xmax - xmin, ymax - ymin, Rat(1)});
    Rat margin = span / Rat(4);
    return {xmin - margin, xmax + margin, ymin - margin, ymax + margin};
}

// Endpoints of a1 X + a2 Y = a0 clipped to the viewport, if it crosses it.
std::optional<std::pair<RatPoint, RatPoint>> clip(const Line& line, const Viewport& vp) {
    std::vector<RatPoint> hits;
    const Rat a0 = line.a0(), a1 = line.a1(), a2 = line.a2();
    if (line.a2() != 0) {
        for (const Rat& x : {vp.xmin, vp.xmax}) {
            Rat y = (a0 - a1 * x) / a2;
            if (vp.ymin <= y && y <= vp.ymax) hits.push_back({x, y});
        }
    }
    if (line.a1() != 0) {
        for (const Rat& y : {vp.ymin, vp.ymax}) {
            Rat x = (a0 - a2 * y) / a1;
            if (vp.xmin <= x && x <= vp.xmax) hits.push_back({x, y});
        }
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.size() < 2) return std::nullopt;
    return std::pair{hits.front(), hits.back()};
}

}  // namespace

std::string arrangement_svg(const GridDims& dims, ArrangementMode mode, const SvgOptions& options) {
    const std::string size_text = "m=" + std::to_string(dims.m()) + " n=" + std::to_string(dims.n());
    if (mode == ArrangementMode::plane) {
        const auto arr = build_plane_arrangement(dims);
        Viewport vp = options.viewport.value_or(default_viewport(arr.vertices));
        if (!(vp.xmin < vp.xmax) || !(vp.ymin < vp.ymax)) {
            throw std::invalid_argument("arrangement_svg: empty viewport");
        }
        SvgCanvas canvas(vp, options.pixels);
        canvas.title("plane partition " + size_text);
        for (const Line& axis : {Line(0, 0, 1), Line(0, 1, 0)}) {
            if (auto seg = clip(axis, vp)) {
                canvas.segment("axis", seg->first, seg->second, "stroke=\"gray\" stroke-dasharray=\"4 4\"");
            }
        }
        for (const auto& line : arr.lines) {
            if (auto seg = clip(line, vp)) {
                canvas.segment("line", seg->first, seg->second, "stroke=\"black\"");
            }
        }
        for (const auto& v : arr.vertices) {
            if (vp.xmin <= v.x && v.x <= vp.xmax && vp.ymin <= v.y && v.y <= vp.ymax) {
                canvas.vertex(v);
            }
        }
        return canvas.finish();
    }

    const auto arr = build_triangle_arrangement(dims);
    Viewport vp{Rat(-1, 20), Rat(21, 20), Rat(-1, 20), Rat(21, 20)};
    SvgCanvas canvas(vp, options.pixels);
    canvas.title("triangle partition " + size_text);
    for (const auto& s : arr.segments) {
        canvas.segment(s.leg ? "leg" : "chord", s.a, s.b, "stroke=\"black\"");
    }
    for (const auto& v : arr.vertex_points) {
        canvas.vertex(v);
    }
    return canvas.finish();
}

void emit_arrangement_svg(const GridDims& dims, ArrangementMode mode, const std::filesystem::path& path,
                          const SvgOptions& options) {
    std::string svg = arrangement_svg(dims, mode, options);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << svg;
    if (!out.flush()) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

}  // namespace thresh2d
