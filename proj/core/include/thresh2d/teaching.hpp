#pragma once

// Essential points and minimal teaching sets of threshold functions.

#include "thresh2d/formulas.hpp"
#include "thresh2d/gridfn.hpp"

#include <span>
#include <vector>

namespace thresh2d {

struct TeachingPoint {
    IntPoint point;
    int value = 0;

    friend bool operator==(const TeachingPoint&, const TeachingPoint&) = default;
};

struct TeachingProfile {
    std::vector<TeachingPoint> points;  // row-major order
    int size = 0;
    int nu = 0;     // f(0, 0)
    int kappa = 0;  // zeros among the teaching points

    std::vector<IntPoint> point_set() const;
};

/// Whether flipping f at p gives another threshold function.
/// Throws std::invalid_argument if f is not threshold, std::out_of_range if p is off-grid.
bool is_essential(const BinaryGridFunction& f, const IntPoint& p);

/// The unique minimal teaching set: all essential points of f.
/// Throws std::invalid_argument if f is not threshold.
TeachingProfile teaching_set(const BinaryGridFunction& f);

/**
 * Definition-level check: true iff no other threshold function agrees with f
 * on every point of `points`. Enumerates all threshold functions, so it is
 * limited to m*n <= 144 (std::length_error otherwise).
 */
bool verify_teaching(const BinaryGridFunction& f, std::span<const IntPoint> points);

/// Same, against a caller-supplied enumeration of the threshold functions.
bool verify_teaching(const BinaryGridFunction& f, std::span<const IntPoint> points,
                     std::span<const BinaryGridFunction> universe);

/// Every threshold function on a grid together with its teaching profile.
struct TeachingCensus {
    GridDims dims;
    std::vector<BinaryGridFunction> functions;  // canonical order
    std::vector<TeachingProfile> profiles;      // parallel to functions
    std::vector<std::int64_t> essential_counts; // per point (row-major): functions where it is essential
};

TeachingCensus teaching_census(const GridDims& dims);

/// Empirical CountReport: t, t3, t4, sigma and u from enumeration, f1/f2 from
/// pairwise gcd scans, s by direct count and l by line deduplication.
CountReport aggregate(const TeachingCensus& census);
CountReport aggregate(const GridDims& dims);

}  // namespace thresh2d
