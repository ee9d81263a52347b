#pragma once

// Parameter-space partitions by the lines a1*x1 + a2*x2 = 1: the whole
// (a1, a2)-plane over E_m x E_n minus the origin, and the triangle
// (0,0), (1,0), (0,1) over {1..m} x {1..n}. Counts come from exact
// geometry only; closed forms live in formulas.hpp.

#include "thresh2d/formulas.hpp"
#include "thresh2d/gridfn.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thresh2d {

struct PlaneArrangement {
    std::vector<Line> lines;                         // one per grid point other than (0,0)
    std::vector<RatPoint> vertices;                  // sorted, distinct
    std::vector<std::int64_t> per_line_vertex_counts;  // parallel to lines
    std::int64_t slope_classes = 0;
};

struct Segment {
    RatPoint a;
    RatPoint b;
    bool leg = false;
};

struct TriangleArrangement {
    std::vector<Segment> segments;  // m*n chords followed by the two legs
    std::vector<RatPoint> vertex_points;
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    std::int64_t cells = 0;
};

struct CellDescriptor {
    BinaryGridFunction function;
    int irredundant_count = 0;
    bool bounded = false;
};

PlaneArrangement build_plane_arrangement(const GridDims& dims);
TriangleArrangement build_triangle_arrangement(const GridDims& dims);

/// Cell, edge and vertex counts of the plane partition. c comes from Euler's
/// relation and (c3, c4) from the edge-incidence identity with v_inf.
PlaneStats plane_arrangement(const GridDims& dims);
TriangleStats triangle_arrangement(const GridDims& dims);

/// (c3, c4) by tallying teaching-set sizes over threshold functions with f(0,0) = 0.
std::pair<BigInt, BigInt> cell_census(const GridDims& dims);

/**
 * Grid points whose constraint in the a0 = 1 system of f cannot be dropped
 * without enlarging the cell (row-major order). The origin's constraint is
 * 0 <= a0; it is irredundant iff the cell's recession cone is two-dimensional.
 * Requires f threshold with f(0,0) = 0 (std::invalid_argument otherwise).
 */
std::vector<IntPoint> irredundant_constraints(const BinaryGridFunction& f);

/// One descriptor per cell of the plane partition (threshold f with f(0,0) = 0).
std::vector<CellDescriptor> cell_descriptors(const GridDims& dims);

enum class ArrangementMode { plane, triangle };

struct Viewport {
    Rat xmin, xmax, ymin, ymax;
};

struct SvgOptions {
    /// Plane mode only; defaults to the vertex bounding box with a margin.
    std::optional<Viewport> viewport;
    int pixels = 600;
};

/// Deterministic SVG drawing of the partition.
std::string arrangement_svg(const GridDims& dims, ArrangementMode mode, const SvgOptions& options = {});

/// Writes arrangement_svg to `path`; throws std::runtime_error if it cannot be written.
void emit_arrangement_svg(const GridDims& dims, ArrangementMode mode, const std::filesystem::path& path,
                          const SvgOptions& options = {});

}  // namespace thresh2d
