#include "thresh2d/teaching.hpp"

#include <algorithm>
#include <stdexcept>

namespace thresh2d {

namespace {

void require_threshold(const BinaryGridFunction& f, const char* where) {
    if (!is_threshold(f)) {
        throw std::invalid_argument(std::string(where) + ": function is not threshold");
    }
}

bool essential_unchecked(const BinaryGridFunction& f, const IntPoint& p) {
    return is_threshold(f.flipped(p));
}

}  // namespace

std::vector<IntPoint> TeachingProfile::point_set() const {
    std::vector<IntPoint> out;
    out.reserve(points.size());
    for (const auto& tp : points) out.push_back(tp.point);
    return out;
}

bool is_essential(const BinaryGridFunction& f, const IntPoint& p) {
    if (!f.contains(p)) {
        throw std::out_of_range("is_essential: point outside the grid");
    }
    require_threshold(f, "is_essential");
    return essential_unchecked(f, p);
}

TeachingProfile teaching_set(const BinaryGridFunction& f) {
    require_threshold(f, "teaching_set");
    TeachingProfile prof;
    for (int i = 0; i < f.dims().size(); ++i) {
        IntPoint p = f.point(i);
        if (essential_unchecked(f, p)) {
            int value = f.bit(i) ? 1 : 0;
            prof.points.push_back({p, value});
            if (value == 0) ++prof.kappa;
        }
    }
    prof.size = static_cast<int>(prof.points.size());
    prof.nu = f(0, 0) ? 1 : 0;
    return prof;
}

bool verify_teaching(const BinaryGridFunction& f, std::span<const IntPoint> points) {
    if (f.dims().size() > 144) {
        throw std::length_error("verify_teaching: m*n must be at most 144");
    }
    require_threshold(f, "verify_teaching");
    auto universe = enumerate_threshold(f.dims());
    return verify_teaching(f, points, universe);
}

bool verify_teaching(const BinaryGridFunction& f, std::span<const IntPoint> points,
                     std::span<const BinaryGridFunction> universe) {
    for (const auto& h : universe) {
        if (h == f) continue;
        bool agrees = std::all_of(points.begin(), points.end(),
                                  [&](const IntPoint& p) { return h(p) == f(p); });
        if (agrees) return false;
    }
    return true;
}

TeachingCensus teaching_census(const GridDims& dims) {
    TeachingCensus c{dims, enumerate_threshold(dims), {}, std::vector<std::int64_t>(static_cast<std::size_t>(dims.size()), 0)};
    c.profiles.reserve(c.functions.size());
    for (const auto& f : c.functions) {
        c.profiles.push_back(teaching_set(f));
        for (const auto& tp : c.profiles.back().points) {
            ++c.essential_counts[static_cast<std::size_t>(f.index(tp.point))];
        }
    }
    return c;
}

CountReport aggregate(const TeachingCensus& census) {
    const GridDims& dims = census.dims;
    CountReport r;

    // Pairwise scans for f1 and f2.
    for (int a = 0; a < dims.size(); ++a) {
        for (int b = 0; b < dims.size(); ++b) {
            if (a == b) continue;
            std::int64_t g = gcd(a % dims.m() - b % dims.m(), a / dims.m() - b / dims.m());
            if (g == 1) r.f1 += 1;
            if (g == 2) r.f2 += 1;
        }
    }
    r.s = s_count(dims);
    r.l = static_cast<std::int64_t>(grid_lines(dims).size());

    r.t = static_cast<std::int64_t>(census.functions.size());
    BigInt size_sum = 0;
    for (const auto& prof : census.profiles) {
        size_sum += prof.size;
        if (prof.size == 3) {
            r.t3 += 1;
            if (prof.kappa == 1 || prof.kappa == 2) {
                r.u.at(prof.nu, prof.kappa) += 1;
            }
        } else if (prof.size == 4) {
            r.t4 += 1;
        }
    }
    r.sigma_bar = r.t == 0 ? Rat(0) : Rat(size_sum, r.t);
    return r;
}

CountReport aggregate(const GridDims& dims) {
    return aggregate(teaching_census(dims));
}

}  // namespace thresh2d
