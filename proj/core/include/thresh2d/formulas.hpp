#pragma once

// Closed-form counts for threshold functions on E_m x E_n and the
// associated line arrangements. Everything is exact; no floating point.

#include "thresh2d/exact.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace thresh2d {

/// Grid extents (m, n) of E_m x E_n, E_k = {0, ..., k-1}. Requires m, n >= 2.
class GridDims {
public:
    /// Throws std::invalid_argument unless m >= 2 and n >= 2.
    GridDims(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int size() const { return m_ * n_; }

    friend bool operator==(const GridDims&, const GridDims&) = default;
    friend auto operator<=>(const GridDims&, const GridDims&) = default;

private:
    int m_;
    int n_;
};

/// Raised when closed forms produce a value that cannot be a count
/// (non-integral or negative).
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// u[nu][kappa - 1]: size-3 teaching sets with g(0,0) = nu and kappa zeros.
class UTable {
public:
    BigInt& at(int nu, int kappa) { return cells_.at(nu).at(kappa - 1); }
    const BigInt& at(int nu, int kappa) const { return cells_.at(nu).at(kappa - 1); }
    BigInt total() const;

    friend bool operator==(const UTable&, const UTable&) = default;

private:
    std::array<std::array<BigInt, 2>, 2> cells_{};
};

struct CountReport {
    BigInt f1, f2, s, l;
    BigInt t, t3, t4;
    Rat sigma_bar;
    UTable u;
};

struct PlaneStats {
    BigInt c, c3, c4, e, v, v_inf;
    friend bool operator==(const PlaneStats&, const PlaneStats&) = default;
};

struct TriangleStats {
    BigInt c, c3, c4, e, v;
    friend bool operator==(const TriangleStats&, const TriangleStats&) = default;
};

/**
 * f_q(mx, nx): sum of (mx - |i|)(nx - |j|) over integer pairs with
 * |i| < mx, |j| < nx and gcd(i, j) == q.
 *
 * Extents may be rational (the unstable-function count evaluates f_1 at
 * half-integer extents). Throws std::invalid_argument for q < 1 or
 * non-positive extents.
 */
Rat f_sum(int q, const Rat& mx, const Rat& nx);
BigInt f_sum(int q, const GridDims& dims);

/// Coprime pairs (i, j) with 0 < i < m, 0 < j < n, by direct count.
BigInt s_count(const GridDims& dims);
/// The same quantity through the inclusion-exclusion of f_1 values.
BigInt s_count_from_f1(const GridDims& dims);

/// Lines through at least two grid points: (f1 - f2) / 2.
BigInt line_count(const GridDims& dims);
/// Threshold functions on the grid: f1 + 2.
BigInt t_count(const GridDims& dims);
/// (t3, t4): threshold functions with teaching sets of size 3 and 4.
std::pair<BigInt, BigInt> t3_t4(const GridDims& dims);
/// Average minimal teaching set size, (4 f1 - 2 f2) / (f1 + 2).
Rat sigma_bar(const GridDims& dims);
UTable u_counts(const GridDims& dims);

PlaneStats plane_stats_formula(const GridDims& dims);
TriangleStats triangle_stats_formula(const GridDims& dims);

/// Every closed form above gathered in one report.
CountReport count_report(const GridDims& dims);

// Structural invariants. Each returns a description of the first violation.
std::optional<std::string> check_invariants(const CountReport& r);
std::optional<std::string> check_invariants(const PlaneStats& p);
std::optional<std::string> check_invariants(const TriangleStats& t, const GridDims& dims);

}  // namespace thresh2d
