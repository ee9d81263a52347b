#include "thresh2d/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace thresh2d {

namespace {

using Wide = __int128;

Wide cross(const IntPoint& p, const IntPoint& q, const IntPoint& r) {
    return static_cast<Wide>(q.x - p.x) * (r.y - p.y) - static_cast<Wide>(q.y - p.y) * (r.x - p.x);
}

// r lies within the bounding box of [p, q]; only meaningful when collinear.
bool within_box(const IntPoint& p, const IntPoint& q, const IntPoint& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

}  // namespace

int orientation(const IntPoint& p, const IntPoint& q, const IntPoint& r) {
    Wide c = cross(p, q, r);
    return (c > 0) - (c < 0);
}

Line::Line(std::int64_t a0, std::int64_t a1, std::int64_t a2) : a0_(a0), a1_(a1), a2_(a2) {
    if (a1 == 0 && a2 == 0) {
        throw std::invalid_argument("degenerate line: a1 and a2 are both zero");
    }
    std::int64_t g = gcd(gcd(a0, a1), a2);
    a0_ /= g;
    a1_ /= g;
    a2_ /= g;
    if (a1_ < 0 || (a1_ == 0 && a2_ < 0)) {
        a0_ = -a0_;
        a1_ = -a1_;
        a2_ = -a2_;
    }
}

Line Line::through(const IntPoint& p, const IntPoint& q) {
    if (p == q) {
        throw std::invalid_argument("Line::through: points coincide");
    }
    std::int64_t a1 = q.y - p.y;
    std::int64_t a2 = p.x - q.x;
    return Line(a1 * p.x + a2 * p.y, a1, a2);
}

int Line::side(const IntPoint& p) const {
    Wide v = static_cast<Wide>(a1_) * p.x + static_cast<Wide>(a2_) * p.y - a0_;
    return (v > 0) - (v < 0);
}

std::string Line::str() const {
    return std::to_string(a1_) + "*x1 + " + std::to_string(a2_) + "*x2 = " + std::to_string(a0_);
}

LineIntersection line_intersection(const Line& l1, const Line& l2) {
    BigInt det = BigInt(l1.a1()) * l2.a2() - BigInt(l1.a2()) * l2.a1();
    if (det == 0) {
        return {l1 == l2 ? LineIntersection::Kind::identical : LineIntersection::Kind::parallel, {}};
    }
    // Cramer's rule.
    BigInt nx = BigInt(l1.a0()) * l2.a2() - BigInt(l1.a2()) * l2.a0();
    BigInt ny = BigInt(l1.a1()) * l2.a0() - BigInt(l1.a0()) * l2.a1();
    return {LineIntersection::Kind::point, {Rat(nx, det), Rat(ny, det)}};
}

std::vector<IntPoint> convex_hull(std::vector<IntPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) {
        return pts;
    }
    std::vector<IntPoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const auto& p = pts[i];
        while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) {
        hull.resize(1);
    }
    return hull;
}

bool segments_intersect(const IntPoint& a, const IntPoint& b, const IntPoint& c, const IntPoint& d) {
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        return true;
    }
    if (o1 == 0 && within_box(a, b, c)) return true;
    if (o2 == 0 && within_box(a, b, d)) return true;
    if (o3 == 0 && within_box(c, d, a)) return true;
    if (o4 == 0 && within_box(c, d, b)) return true;
    return false;
}

HullLocation locate_in_hull(std::span<const IntPoint> hull, const IntPoint& p) {
    if (hull.empty()) {
        return HullLocation::outside;
    }
    if (hull.size() == 1) {
        return hull[0] == p ? HullLocation::boundary : HullLocation::outside;
    }
    if (hull.size() == 2) {
        return segments_intersect(hull[0], hull[1], p, p) ? HullLocation::boundary
                                                           : HullLocation::outside;
    }
    bool on_edge = false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        int o = orientation(hull[i], hull[(i + 1) % hull.size()], p);
        if (o < 0) return HullLocation::outside;
        if (o == 0) on_edge = true;
    }
    return on_edge ? HullLocation::boundary : HullLocation::interior;
}

bool hulls_intersect(std::span<const IntPoint> p, std::span<const IntPoint> q) {
    if (p.empty() || q.empty()) {
        return false;
    }
    // Any edge crossing, including touching and collinear overlap.
    auto edges = [](std::span<const IntPoint> h, std::size_t i) {
        return std::pair{h[i], h[(i + 1) % h.size()]};
    };
    std::size_t pe = p.size() == 2 ? 1 : p.size();
    std::size_t qe = q.size() == 2 ? 1 : q.size();
    for (std::size_t i = 0; i < pe; ++i) {
        auto [a, b] = edges(p, i);
        for (std::size_t j = 0; j < qe; ++j) {
            auto [c, d] = edges(q, j);
            if (segments_intersect(a, b, c, d)) {
                return true;
            }
        }
    }
    // Containment without edge contact.
    if (locate_in_hull(q, p[0]) != HullLocation::outside) return true;
    if (locate_in_hull(p, q[0]) != HullLocation::outside) return true;
    return false;
}

}  // namespace thresh2d
