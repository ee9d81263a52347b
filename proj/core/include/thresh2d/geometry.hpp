#pragma once

// Exact planar predicates on integer points, integer lines and convex hulls.

#include "thresh2d/exact.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace thresh2d {

struct IntPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const IntPoint&, const IntPoint&) = default;
    friend auto operator<=>(const IntPoint&, const IntPoint&) = default;
};

struct RatPoint {
    Rat x;
    Rat y;

    friend bool operator==(const RatPoint&, const RatPoint&) = default;
    friend std::strong_ordering operator<=>(const RatPoint& a, const RatPoint& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

/// Sign of (q - p) x (r - p): +1 counter-clockwise, -1 clockwise, 0 collinear.
int orientation(const IntPoint& p, const IntPoint& q, const IntPoint& r);

/**
 * Line a1*x1 + a2*x2 = a0 with integer coefficients.
 *
 * Always normalized: gcd(|a0|, |a1|, |a2|) == 1 and a1 > 0, or a1 == 0 and
 * a2 > 0. Two Line values are equal iff they describe the same point set.
 */
class Line {
public:
    /// Throws std::invalid_argument when a1 == a2 == 0.
    Line(std::int64_t a0, std::int64_t a1, std::int64_t a2);

    /// The line through two distinct points.
    static Line through(const IntPoint& p, const IntPoint& q);

    std::int64_t a0() const { return a0_; }
    std::int64_t a1() const { return a1_; }
    std::int64_t a2() const { return a2_; }

    /// Sign of a1*x1 + a2*x2 - a0 at p.
    int side(const IntPoint& p) const;
    bool contains(const IntPoint& p) const { return side(p) == 0; }

    std::string str() const;

    friend bool operator==(const Line&, const Line&) = default;
    friend auto operator<=>(const Line&, const Line&) = default;

private:
    std::int64_t a0_;
    std::int64_t a1_;
    std::int64_t a2_;
};

struct LineIntersection {
    enum class Kind { point, parallel, identical };
    Kind kind = Kind::point;
    RatPoint point;  // meaningful only when kind == point
};

/// Exact intersection of two lines.
LineIntersection line_intersection(const Line& l1, const Line& l2);

/// Convex hull in counter-clockwise order without collinear vertices.
/// Returns 0, 1 or 2 points for empty, singleton or collinear input.
std::vector<IntPoint> convex_hull(std::vector<IntPoint> pts);

/// Closed segment intersection; a segment may be degenerate (a == b).
bool segments_intersect(const IntPoint& a, const IntPoint& b, const IntPoint& c, const IntPoint& d);

/// Whether two convex hulls (as returned by convex_hull) share a point.
bool hulls_intersect(std::span<const IntPoint> p, std::span<const IntPoint> q);

enum class HullLocation { outside, boundary, interior };

/// Location of `p` relative to a convex hull (as returned by convex_hull).
/// Degenerate hulls have no interior.
HullLocation locate_in_hull(std::span<const IntPoint> hull, const IntPoint& p);

}  // namespace thresh2d
