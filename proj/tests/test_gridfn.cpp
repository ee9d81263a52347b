#include "thresh2d/gridfn.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace thresh2d;

namespace {

BinaryGridFunction size3_example() {
    return from_line(Line(55, 7, 5), GridDims(10, 10), Side::le);
}

BinaryGridFunction size4_example() {
    return from_line(Line(22, 3, 2), GridDims(10, 10), Side::le);
}

}  // namespace

TEST(FromLine, ExampleFunctions) {
    auto g = size3_example();
    EXPECT_EQ(g(5, 4), 0);
    EXPECT_EQ(g(8, 0), 1);
    EXPECT_EQ(g(3, 7), 1);
    auto h = size4_example();
    EXPECT_EQ(h(6, 2), 0);
    EXPECT_EQ(h(2, 8), 0);
    EXPECT_EQ(h(7, 1), 1);
    EXPECT_EQ(h(3, 7), 1);
}

TEST(FromLine, SidesAreComplementary) {
    GridDims d(7, 5);
    for (const auto& line : {Line(55, 7, 5), Line(3, 1, -2), Line(0, 0, 1)}) {
        auto le = from_line(line, d, Side::le);
        auto gt = from_line(line, d, Side::gt);
        EXPECT_EQ(le.complement(), gt);
    }
}

TEST(FromLine, UnreachableLineGivesConstantOne) {
    for (auto d : {GridDims(2, 2), GridDims(4, 7)}) {
        auto f = from_line(Line(-1, 1, 0), d, Side::le);
        EXPECT_EQ(f, BinaryGridFunction(d, true));
    }
}

TEST(FromCoefficients, ReadsInequalityAsGiven) {
    GridDims d(10, 10);
    // -7x1 - 5x2 <= -55 keeps the points with 7x1 + 5x2 >= 55 as zeros.
    auto f = from_coefficients(-55, -7, -5, d, Side::le);
    EXPECT_EQ(f(5, 4), 0);
    EXPECT_EQ(f(0, 0), 1);
    EXPECT_THROW(from_coefficients(0, 0, 0, d, Side::le), std::invalid_argument);
}

TEST(IsThreshold, Examples) {
    GridDims d(2, 2);
    EXPECT_TRUE(is_threshold(BinaryGridFunction(d, false)));
    BinaryGridFunction xor_fn(d, false);
    xor_fn.set({0, 0}, true);
    xor_fn.set({1, 1}, true);
    EXPECT_FALSE(is_threshold(xor_fn));
    EXPECT_FALSE(is_threshold(xor_fn.complement()));
    EXPECT_TRUE(is_threshold(size3_example()));
    EXPECT_TRUE(is_threshold(size4_example()));
}

TEST(IsThreshold, AgreesWithWitnessOracleOnSmallGrids) {
    for (auto d : {GridDims(2, 2), GridDims(2, 3), GridDims(3, 2), GridDims(2, 4), GridDims(3, 3)}) {
        const std::uint64_t total = std::uint64_t{1} << d.size();
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            BinaryGridFunction f(d, false);
            for (int i = 0; i < d.size(); ++i) f.set(i, (bits >> i) & 1U);
            ASSERT_EQ(is_threshold(f), oracle::threshold_by_witnesses(f)) << f.to_hex();
        }
    }
}

TEST(IsThreshold, RandomFunctionsOnLargerGrid) {
    GridDims d(5, 6);
    std::mt19937 rng(5);
    for (int k = 0; k < 300; ++k) {
        BinaryGridFunction f(d, false);
        // Mostly separable-looking inputs: a random line with a few flips.
        std::uniform_int_distribution<int> c(-6, 6);
        int a1 = c(rng), a2 = c(rng);
        if (a1 == 0 && a2 == 0) a1 = 1;
        f = from_coefficients(c(rng) * 3, a1, a2, d, Side::le);
        for (int flips = k % 3; flips > 0; --flips) {
            f = f.flipped(f.point(static_cast<int>(rng() % static_cast<unsigned>(d.size()))));
        }
        ASSERT_EQ(is_threshold(f), oracle::threshold_by_witnesses(f)) << f.to_hex();
    }
}

TEST(Enumerate, MatchesExhaustiveScan) {
    for (auto d : {GridDims(2, 2), GridDims(2, 3), GridDims(3, 2), GridDims(3, 3), GridDims(2, 4)}) {
        EXPECT_EQ(enumerate_threshold(d), oracle::threshold_functions_by_scan(d));
    }
    EXPECT_EQ(enumerate_threshold(GridDims(2, 2)).size(), 14U);
    EXPECT_EQ(enumerate_threshold(GridDims(3, 3)).size(), 58U);
}

TEST(Enumerate, CardinalityMatchesClosedFormThrough12) {
    for (int m = 2; m <= 12; ++m)
        for (int n = 2; n <= 12; ++n)
            EXPECT_EQ(BigInt(enumerate_threshold(GridDims(m, n)).size()), t_count(GridDims(m, n)))
                << m << "x" << n;
}

TEST(Enumerate, CanonicalOrderConstantsAndComplementClosure) {
    GridDims d(4, 5);
    auto all = enumerate_threshold(d);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
    EXPECT_TRUE(std::binary_search(all.begin(), all.end(), BinaryGridFunction(d, false)));
    EXPECT_TRUE(std::binary_search(all.begin(), all.end(), BinaryGridFunction(d, true)));
    EXPECT_EQ(all.front(), BinaryGridFunction(d, false));
    for (const auto& f : all) {
        EXPECT_TRUE(is_threshold(f));
        EXPECT_TRUE(std::binary_search(all.begin(), all.end(), f.complement()));
    }
}

TEST(BruteForce, CountsMatchClosedForm) {
    EXPECT_EQ(brute_force_threshold_count(GridDims(2, 2)), 14);
    EXPECT_EQ(BigInt(brute_force_threshold_count(GridDims(2, 3))), f_sum(1, GridDims(2, 3)) + 2);
    EXPECT_EQ(brute_force_threshold_count(GridDims(4, 4)), 174);
    EXPECT_THROW(brute_force_threshold_count(GridDims(5, 5)), std::length_error);
}

TEST(AdjacentPairs, ExamplesMatchF1) {
    EXPECT_EQ(adjacent_pairs_count(GridDims(2, 2)), 12);
    EXPECT_EQ(adjacent_pairs_count(GridDims(3, 3)), 56);
    EXPECT_EQ(BigInt(adjacent_pairs_count(GridDims(2, 4))), f_sum(1, GridDims(2, 4)));
    for (int m = 2; m <= 10; ++m) {
        for (int n = 2; n <= 10; ++n) {
            GridDims d(m, n);
            std::int64_t c = adjacent_pairs_count(d);
            EXPECT_EQ(c, oracle::adjacency_by_scan(m, n));
            EXPECT_EQ(BigInt(c), f_sum(1, d));
        }
    }
}

TEST(LinesThroughPoint, Examples) {
    EXPECT_EQ(lines_through_point(GridDims(4, 4), {1, 1}), 8);
    EXPECT_EQ(lines_through_point(GridDims(2, 2), {0, 0}), 3);
    EXPECT_THROW(lines_through_point(GridDims(2, 2), {2, 0}), std::out_of_range);
    EXPECT_THROW(lines_through_point(GridDims(2, 2), {0, -1}), std::out_of_range);
}

TEST(PointsOnLine, Examples) {
    EXPECT_EQ(points_on_line(GridDims(3, 3), Line(0, 0, 1)), 3);
    EXPECT_EQ(points_on_line(GridDims(3, 3), Line(2, 1, 1)), 3);
    // Only (5, 4) solves 7x1 + 5x2 = 55 inside E_10 x E_10.
    EXPECT_EQ(points_on_line(GridDims(10, 10), Line(55, 7, 5)), 1);
}

TEST(GridLines, CountAndIncidenceIdentities) {
    for (int m = 2; m <= 10; ++m) {
        for (int n = 2; n <= 10; ++n) {
            GridDims d(m, n);
            auto lines = grid_lines(d);
            EXPECT_EQ(BigInt(lines.size()), line_count(d));
            std::int64_t incidences = 0;
            std::int64_t adjacent = 0;
            for (const auto& l : lines) {
                std::int64_t z = points_on_line(d, l);
                ASSERT_GE(z, 2);
                incidences += z;
                adjacent += z - 1;
            }
            EXPECT_EQ(2 * BigInt(adjacent), f_sum(1, d));
            std::int64_t per_point = 0;
            for (int y = 0; y < n; ++y)
                for (int x = 0; x < m; ++x) per_point += lines_through_point(d, {x, y});
            EXPECT_EQ(per_point, incidences);
        }
    }
}

TEST(Hex, KnownEncodingsAndRoundTrip) {
    GridDims d(2, 2);
    BinaryGridFunction f(d, false);
    f.set({0, 0}, true);
    EXPECT_EQ(f.to_hex(), "1");
    f.set({1, 1}, true);
    EXPECT_EQ(f.to_hex(), "9");
    EXPECT_EQ(BinaryGridFunction(GridDims(3, 3), true).to_hex(), "1ff");
    EXPECT_THROW(BinaryGridFunction::from_hex(GridDims(3, 3), "3ff"), std::invalid_argument);
    EXPECT_THROW(BinaryGridFunction::from_hex(GridDims(3, 3), "ff"), std::invalid_argument);

    std::mt19937 rng(17);
    for (auto dims : {GridDims(3, 5), GridDims(10, 10), GridDims(20, 13)}) {
        for (int k = 0; k < 50; ++k) {
            BinaryGridFunction g(dims, false);
            for (int i = 0; i < dims.size(); ++i) g.set(i, rng() & 1U);
            EXPECT_EQ(BinaryGridFunction::from_hex(dims, g.to_hex()), g);
        }
    }
}

TEST(Ordering, LexicographicFromOrigin) {
    GridDims d(3, 3);
    BinaryGridFunction a(d, false), b(d, false);
    a.set(5, true);
    b.set(0, true);
    EXPECT_LT(a, b);  // a has 0 at index 0
    EXPECT_FALSE(b < a);
    EXPECT_FALSE(a < a);
}
