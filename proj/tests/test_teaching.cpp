#include "thresh2d/teaching.hpp"

#include <gtest/gtest.h>

using namespace thresh2d;

namespace {

BinaryGridFunction size3_example() {
    return from_line(Line(55, 7, 5), GridDims(10, 10), Side::le);
}

BinaryGridFunction size4_example() {
    return from_line(Line(22, 3, 2), GridDims(10, 10), Side::le);
}

std::vector<IntPoint> all_points(const GridDims& d) {
    std::vector<IntPoint> pts;
    for (int y = 0; y < d.n(); ++y)
        for (int x = 0; x < d.m(); ++x) pts.push_back({x, y});
    return pts;
}

}  // namespace

TEST(IsEssential, Examples) {
    auto g = size3_example();
    EXPECT_TRUE(is_essential(g, {5, 4}));
    EXPECT_FALSE(is_essential(g, {0, 0}));
    BinaryGridFunction zero(GridDims(2, 2), false);
    for (auto p : all_points(zero.dims())) EXPECT_TRUE(is_essential(zero, p));
}

TEST(IsEssential, RejectsBadInput) {
    BinaryGridFunction xor_fn(GridDims(2, 2), false);
    xor_fn.set({0, 0}, true);
    xor_fn.set({1, 1}, true);
    EXPECT_THROW(is_essential(xor_fn, {0, 0}), std::invalid_argument);
    EXPECT_THROW(teaching_set(xor_fn), std::invalid_argument);
    EXPECT_THROW(is_essential(size3_example(), {10, 0}), std::out_of_range);
}

TEST(TeachingSet, TenByTenExamples) {
    auto left = teaching_set(size3_example());
    EXPECT_EQ(left.points, (std::vector<TeachingPoint>{{{8, 0}, 1}, {{5, 4}, 0}, {{3, 7}, 1}}));
    EXPECT_EQ(left.size, 3);
    EXPECT_EQ(left.nu, 0);
    EXPECT_EQ(left.kappa, 1);

    auto right = teaching_set(size4_example());
    EXPECT_EQ(right.points,
              (std::vector<TeachingPoint>{{{7, 1}, 1}, {{6, 2}, 0}, {{3, 7}, 1}, {{2, 8}, 0}}));
    EXPECT_EQ(right.size, 4);
    EXPECT_EQ(right.kappa, 2);
}

TEST(TeachingSet, ComplementFlipsValuesOnly) {
    for (const auto& f : enumerate_threshold(GridDims(4, 3))) {
        auto a = teaching_set(f);
        auto b = teaching_set(f.complement());
        ASSERT_EQ(a.point_set(), b.point_set());
        for (std::size_t i = 0; i < a.points.size(); ++i) {
            EXPECT_EQ(a.points[i].value, 1 - b.points[i].value);
        }
        EXPECT_EQ(a.nu, 1 - b.nu);
    }
}

TEST(VerifyTeaching, MinimalAndUniqueOn3x3) {
    GridDims d(3, 3);
    auto all = enumerate_threshold(d);
    ASSERT_EQ(all.size(), 58U);
    for (const auto& f : all) {
        auto pts = teaching_set(f).point_set();
        EXPECT_TRUE(verify_teaching(f, pts, all));
        for (std::size_t drop = 0; drop < pts.size(); ++drop) {
            auto fewer = pts;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
            EXPECT_FALSE(verify_teaching(f, fewer, all));
        }
        auto full = all_points(d);
        EXPECT_TRUE(verify_teaching(f, full));
    }
}

TEST(VerifyTeaching, SizeGuard) {
    BinaryGridFunction f(GridDims(13, 12), false);
    std::vector<IntPoint> none;
    EXPECT_THROW(verify_teaching(f, none), std::length_error);
}

TEST(Aggregate, SmallGrids) {
    auto r = aggregate(GridDims(2, 2));
    EXPECT_EQ(r.t, 14);
    EXPECT_EQ(r.t3, 8);
    EXPECT_EQ(r.t4, 6);
    EXPECT_EQ(r.sigma_bar, Rat(BigInt(24), BigInt(7)));
    EXPECT_EQ(r.u.at(0, 1), 1);
    EXPECT_EQ(r.u.at(0, 2), 3);
    EXPECT_EQ(r.u.at(1, 1), 3);
    EXPECT_EQ(r.u.at(1, 2), 1);
    EXPECT_EQ(check_invariants(r), std::nullopt);

    r = aggregate(GridDims(3, 3));
    EXPECT_EQ(r.t, 58);
    EXPECT_EQ(r.t3, 40);
    EXPECT_EQ(r.t4, 18);
    EXPECT_EQ(r.u.at(0, 1), 7);
    EXPECT_EQ(r.u.at(0, 2), 13);
}

TEST(Aggregate, MatchesClosedFormsThrough6) {
    for (int m = 2; m <= 6; ++m) {
        for (int n = 2; n <= 6; ++n) {
            GridDims d(m, n);
            auto e = aggregate(d);
            auto c = count_report(d);
            EXPECT_EQ(e.f1, c.f1);
            EXPECT_EQ(e.f2, c.f2);
            EXPECT_EQ(e.s, c.s);
            EXPECT_EQ(e.l, c.l);
            EXPECT_EQ(e.t, c.t);
            EXPECT_EQ(e.t3, c.t3);
            EXPECT_EQ(e.t4, c.t4);
            EXPECT_EQ(e.sigma_bar, c.sigma_bar);
            EXPECT_EQ(e.u, c.u) << m << "x" << n;
            EXPECT_EQ(check_invariants(e), std::nullopt);
        }
    }
}

TEST(Census, StructuralPropertiesAndEssentialIdentity) {
    for (int m = 2; m <= 6; ++m) {
        for (int n = 2; n <= 6; ++n) {
            GridDims d(m, n);
            auto census = teaching_census(d);
            for (std::size_t i = 0; i < census.functions.size(); ++i) {
                const auto& prof = census.profiles[i];
                ASSERT_TRUE(prof.size == 3 || prof.size == 4);
                if (prof.size == 4 && !census.functions[i].is_constant()) {
                    EXPECT_EQ(prof.kappa, 2);
                }
                EXPECT_TRUE(std::is_sorted(prof.points.begin(), prof.points.end(),
                                           [](const auto& a, const auto& b) { return row_major_less(a.point, b.point); }));
            }
            // h(p) = 4 l(p) point by point, and the totals give sigma * t.
            std::int64_t total = 0;
            for (int idx = 0; idx < d.size(); ++idx) {
                IntPoint p{idx % m, idx / m};
                EXPECT_EQ(census.essential_counts[static_cast<std::size_t>(idx)], 4 * lines_through_point(d, p));
                total += census.essential_counts[static_cast<std::size_t>(idx)];
            }
            EXPECT_EQ(Rat(total), sigma_bar(d) * Rat(t_count(d)));
        }
    }
}
