#include "thresh2d/arrangement.hpp"
#include "thresh2d/teaching.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>

using namespace thresh2d;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST(PlaneArrangement, ThreeByThree) {
    auto p = plane_arrangement(GridDims(3, 3));
    EXPECT_EQ(p, (PlaneStats{29, 20, 9, 43, 15, 5}));
}

TEST(PlaneArrangement, ThreeLinesFor2x2) {
    auto arr = build_plane_arrangement(GridDims(2, 2));
    EXPECT_EQ(arr.lines, (std::vector<Line>{Line(1, 1, 0), Line(1, 0, 1), Line(1, 1, 1)}));
    EXPECT_EQ(arr.vertices.size(), 3U);
    EXPECT_EQ(arr.per_line_vertex_counts, (std::vector<std::int64_t>{2, 2, 2}));
    EXPECT_EQ(plane_arrangement(GridDims(2, 2)), plane_stats_formula(GridDims(2, 2)));
}

TEST(PlaneArrangement, MatchesFormulasAndSlopeClasses) {
    for (int m = 2; m <= 8; ++m) {
        for (int n = 2; n <= 8; ++n) {
            GridDims d(m, n);
            auto geo = plane_arrangement(d);
            EXPECT_EQ(geo, plane_stats_formula(d)) << m << "x" << n;
            EXPECT_EQ(geo.v - geo.e + geo.c, 1);
            auto arr = build_plane_arrangement(d);
            EXPECT_EQ(BigInt(arr.slope_classes), s_count(d) + 2);
            auto lines = arr.lines;
            std::sort(lines.begin(), lines.end());
            EXPECT_EQ(std::adjacent_find(lines.begin(), lines.end()), lines.end());
            EXPECT_EQ(lines.size(), static_cast<std::size_t>(m * n - 1));
        }
    }
}

TEST(TriangleArrangement, FourByFour) {
    auto t = triangle_arrangement(GridDims(4, 4));
    EXPECT_EQ(t, (TriangleStats{47, 33, 14, 82, 36}));
    auto arr = build_triangle_arrangement(GridDims(4, 4));
    EXPECT_EQ(arr.segments.size(), 18U);
}

TEST(TriangleArrangement, CellsBySignVectors) {
    EXPECT_EQ(oracle::triangle_cells_by_sweep(4, 4), 47);
    EXPECT_EQ(oracle::triangle_cells_by_sweep(2, 2), 5);
    for (int m = 2; m <= 6; ++m) {
        for (int n = 2; n <= 6; ++n) {
            EXPECT_EQ(oracle::triangle_cells_by_sweep(m, n), build_triangle_arrangement(GridDims(m, n)).cells)
                << m << "x" << n;
        }
    }
}

TEST(TriangleArrangement, MatchesFormulas) {
    EXPECT_EQ(triangle_arrangement(GridDims(2, 2)), triangle_stats_formula(GridDims(2, 2)));
    for (int m = 2; m <= 8; ++m) {
        for (int n = 2; n <= 8; ++n) {
            GridDims d(m, n);
            auto geo = triangle_arrangement(d);
            EXPECT_EQ(geo, triangle_stats_formula(d)) << m << "x" << n;
            EXPECT_EQ(geo.v - geo.e + geo.c, 1);
        }
    }
}

TEST(CellCensus, Examples) {
    EXPECT_EQ(cell_census(GridDims(3, 3)), std::make_pair(BigInt(20), BigInt(9)));
    EXPECT_EQ(cell_census(GridDims(2, 2)), std::make_pair(BigInt(4), BigInt(3)));
    EXPECT_EQ(cell_census(GridDims(4, 4)), std::make_pair(BigInt(52), BigInt(35)));
}

TEST(CellCensus, ThreeWayAgreement) {
    for (int m = 2; m <= 6; ++m) {
        for (int n = 2; n <= 6; ++n) {
            GridDims d(m, n);
            auto [c3, c4] = cell_census(d);
            auto geo = plane_arrangement(d);
            auto formula = plane_stats_formula(d);
            EXPECT_EQ(c3, geo.c3);
            EXPECT_EQ(c4, geo.c4);
            EXPECT_EQ(c3, formula.c3);
            EXPECT_EQ(c4, formula.c4);
        }
    }
}

TEST(IrredundantConstraints, TenByTenExamples) {
    auto g = from_line(Line(55, 7, 5), GridDims(10, 10), Side::le);
    EXPECT_EQ(irredundant_constraints(g), (std::vector<IntPoint>{{8, 0}, {5, 4}, {3, 7}}));
    auto h = from_line(Line(22, 3, 2), GridDims(10, 10), Side::le);
    EXPECT_EQ(irredundant_constraints(h), teaching_set(h).point_set());
}

TEST(IrredundantConstraints, ConstantZeroIncludesOrigin) {
    GridDims d(4, 3);
    BinaryGridFunction zero(d, false);
    auto pts = irredundant_constraints(zero);
    EXPECT_EQ(pts, (std::vector<IntPoint>{{0, 0}, {3, 0}, {0, 2}, {3, 2}}));
    EXPECT_EQ(pts, teaching_set(zero).point_set());
}

TEST(IrredundantConstraints, Preconditions) {
    GridDims d(3, 3);
    EXPECT_THROW(irredundant_constraints(BinaryGridFunction(d, true)), std::invalid_argument);
    BinaryGridFunction bad(d, false);
    bad.set({1, 1}, true);
    EXPECT_THROW(irredundant_constraints(bad), std::invalid_argument);
}

TEST(IrredundantConstraints, BijectionWithTeachingSets) {
    for (int m = 2; m <= 5; ++m) {
        for (int n = 2; n <= 5; ++n) {
            for (const auto& f : enumerate_threshold(GridDims(m, n))) {
                if (f(0, 0)) continue;
                ASSERT_EQ(irredundant_constraints(f), teaching_set(f).point_set()) << m << "x" << n << " " << f.to_hex();
            }
        }
    }
}

TEST(CellDescriptors, SizesAndUnboundedCount) {
    for (int m = 2; m <= 6; ++m) {
        for (int n = 2; n <= 6; ++n) {
            GridDims d(m, n);
            auto cells = cell_descriptors(d);
            EXPECT_EQ(BigInt(cells.size()), plane_stats_formula(d).c);
            int unbounded = 0;
            for (const auto& c : cells) {
                EXPECT_TRUE(c.irredundant_count == 3 || c.irredundant_count == 4);
                EXPECT_EQ(c.irredundant_count, teaching_set(c.function).size);
                if (!c.bounded) ++unbounded;
            }
            // Every line contributes two unbounded cells at its two ends.
            EXPECT_EQ(unbounded, 2 * (m * n - 1));
        }
    }
}

TEST(Svg, PlaneThreeByThree) {
    auto svg = arrangement_svg(GridDims(3, 3), ArrangementMode::plane);
    EXPECT_EQ(count_occurrences(svg, "class=\"line\""), 8U);
    EXPECT_EQ(count_occurrences(svg, "class=\"vertex\""), 15U);
    EXPECT_EQ(svg, arrangement_svg(GridDims(3, 3), ArrangementMode::plane));
    EXPECT_EQ(count_occurrences(arrangement_svg(GridDims(2, 2), ArrangementMode::plane), "class=\"line\""), 3U);
}

TEST(Svg, TriangleFourByFour) {
    auto svg = arrangement_svg(GridDims(4, 4), ArrangementMode::triangle);
    EXPECT_EQ(count_occurrences(svg, "class=\"chord\""), 16U);
    EXPECT_EQ(count_occurrences(svg, "class=\"leg\""), 2U);
    EXPECT_EQ(count_occurrences(svg, "class=\"vertex\""), 36U);
}

TEST(Svg, CustomViewportAndFileOutput) {
    SvgOptions opts;
    opts.viewport = Viewport{Rat(-2), Rat(2), Rat(-2), Rat(2)};
    auto svg = arrangement_svg(GridDims(3, 3), ArrangementMode::plane, opts);
    EXPECT_EQ(count_occurrences(svg, "class=\"line\""), 8U);

    auto path = std::filesystem::temp_directory_path() / "thresh2d_test_fig4.svg";
    emit_arrangement_svg(GridDims(4, 4), ArrangementMode::triangle, path);
    std::ifstream in(path, std::ios::binary);
    std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(written, arrangement_svg(GridDims(4, 4), ArrangementMode::triangle));
    std::filesystem::remove(path);

    EXPECT_THROW(emit_arrangement_svg(GridDims(2, 2), ArrangementMode::plane, "/nonexistent-dir/x.svg"),
                 std::runtime_error);
}
