#pragma once

// Binary functions on E_m x E_n, exact separability, and enumeration of
// all threshold functions.

#include "thresh2d/formulas.hpp"
#include "thresh2d/geometry.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace thresh2d {

/**
 * Total map E_m x E_n -> {0, 1}, stored as a row-major bitset
 * (index = x2 * m + x1). Equality is bitwise; ordering is lexicographic on
 * the bit sequence starting from point (0, 0).
 */
class BinaryGridFunction {
public:
    /// Constant function with the given value.
    BinaryGridFunction(GridDims dims, bool value);

    /// Parses the lowercase hex form produced by to_hex().
    static BinaryGridFunction from_hex(GridDims dims, std::string_view hex);

    const GridDims& dims() const { return dims_; }

    bool contains(const IntPoint& p) const {
        return p.x >= 0 && p.y >= 0 && p.x < dims_.m() && p.y < dims_.n();
    }
    int index(const IntPoint& p) const { return static_cast<int>(p.y) * dims_.m() + static_cast<int>(p.x); }
    IntPoint point(int index) const { return {index % dims_.m(), index / dims_.m()}; }

    bool bit(int index) const { return (words_[index >> 6] >> (index & 63)) & 1U; }
    bool operator()(const IntPoint& p) const { return bit(index(p)); }
    bool operator()(std::int64_t x1, std::int64_t x2) const { return (*this)(IntPoint{x1, x2}); }

    void set(int index, bool value);
    void set(const IntPoint& p, bool value) { set(index(p), value); }

    /// Copy with the value at p negated.
    BinaryGridFunction flipped(const IntPoint& p) const;
    /// 1 - f.
    BinaryGridFunction complement() const;

    int count_ones() const;
    bool is_constant() const;

    /// M_0(f) and M_1(f) in row-major order.
    std::vector<IntPoint> zeros() const;
    std::vector<IntPoint> ones() const;

    /// Lowercase hex of the bitset read as an integer (bit k = point k),
    /// zero-padded to ceil(m*n / 4) digits.
    std::string to_hex() const;

    friend bool operator==(const BinaryGridFunction&, const BinaryGridFunction&) = default;
    friend bool operator<(const BinaryGridFunction& a, const BinaryGridFunction& b);

private:
    GridDims dims_;
    std::vector<std::uint64_t> words_;
};

enum class Side { le, gt };

/// Function with zeros where a1*x1 + a2*x2 <= a0 (Side::le) or > a0 (Side::gt),
/// using the line's normalized coefficients.
BinaryGridFunction from_line(const Line& line, const GridDims& dims, Side side);

/// Same as from_line, but the inequality is read with the coefficients as given
/// (before sign normalization). Throws std::invalid_argument if a1 == a2 == 0.
BinaryGridFunction from_coefficients(std::int64_t a0, std::int64_t a1, std::int64_t a2,
                                     const GridDims& dims, Side side);

/// Whether the zeros and ones can be separated by a line.
bool is_threshold(const BinaryGridFunction& f);

/// Every threshold function exactly once, in canonical (sorted) order.
std::vector<BinaryGridFunction> enumerate_threshold(const GridDims& dims);

/// Scan of all 2^(m*n) functions. Throws std::length_error when m*n > 20.
std::int64_t brute_force_threshold_count(const GridDims& dims);

/// Ordered pairs of distinct points with no grid point strictly between them.
std::int64_t adjacent_pairs_count(const GridDims& dims);

/// Distinct lines through p and at least one other grid point.
/// Throws std::out_of_range if p is outside the grid.
std::int64_t lines_through_point(const GridDims& dims, const IntPoint& p);

/// Number of grid points on the line.
std::int64_t points_on_line(const GridDims& dims, const Line& line);

/// All distinct lines through at least two grid points, sorted.
std::vector<Line> grid_lines(const GridDims& dims);

/// Strict weak order on points: by x2, then x1.
bool row_major_less(const IntPoint& a, const IntPoint& b);

}  // namespace thresh2d
