#include "thresh2d/gridfn.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace thresh2d {

namespace {

int word_count(const GridDims& dims) {
    return (dims.size() + 63) / 64;
}

std::vector<IntPoint> all_points(const GridDims& dims) {
    std::vector<IntPoint> pts;
    pts.reserve(static_cast<std::size_t>(dims.size()));
    for (int y = 0; y < dims.n(); ++y) {
        for (int x = 0; x < dims.m(); ++x) {
            pts.push_back({x, y});
        }
    }
    return pts;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
}

}  // namespace

BinaryGridFunction::BinaryGridFunction(GridDims dims, bool value)
    : dims_(dims), words_(static_cast<std::size_t>(word_count(dims)), value ? ~std::uint64_t{0} : 0) {
    if (value) {
        int tail = dims_.size() & 63;
        if (tail != 0) {
            words_.back() = (std::uint64_t{1} << tail) - 1;
        }
    }
}

BinaryGridFunction BinaryGridFunction::from_hex(GridDims dims, std::string_view hex) {
    const std::size_t digits = static_cast<std::size_t>((dims.size() + 3) / 4);
    if (hex.size() != digits) {
        throw std::invalid_argument("hex string has " + std::to_string(hex.size()) + " digits, expected " +
                                    std::to_string(digits));
    }
    BinaryGridFunction f(dims, false);
    for (std::size_t k = 0; k < digits; ++k) {
        int nibble = hex_value(hex[digits - 1 - k]);
        for (int b = 0; b < 4; ++b) {
            if ((nibble >> b) & 1) {
                int idx = static_cast<int>(4 * k) + b;
                if (idx >= dims.size()) {
                    throw std::invalid_argument("hex string sets bits beyond the grid");
                }
                f.set(idx, true);
            }
        }
    }
    return f;
}

void BinaryGridFunction::set(int index, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= mask;
    } else {
        words_[index >> 6] &= ~mask;
    }
}

BinaryGridFunction BinaryGridFunction::flipped(const IntPoint& p) const {
    BinaryGridFunction g = *this;
    int idx = index(p);
    g.words_[idx >> 6] ^= std::uint64_t{1} << (idx & 63);
    return g;
}

BinaryGridFunction BinaryGridFunction::complement() const {
    BinaryGridFunction g(dims_, true);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        g.words_[i] ^= words_[i];
    }
    return g;
}

int BinaryGridFunction::count_ones() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool BinaryGridFunction::is_constant() const {
    int ones = count_ones();
    return ones == 0 || ones == dims_.size();
}

std::vector<IntPoint> BinaryGridFunction::zeros() const {
    std::vector<IntPoint> out;
    for (int i = 0; i < dims_.size(); ++i) {
        if (!bit(i)) out.push_back(point(i));
    }
    return out;
}

std::vector<IntPoint> BinaryGridFunction::ones() const {
    std::vector<IntPoint> out;
    for (int i = 0; i < dims_.size(); ++i) {
        if (bit(i)) out.push_back(point(i));
    }
    return out;
}

std::string BinaryGridFunction::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const int digits = (dims_.size() + 3) / 4;
    std::string out(static_cast<std::size_t>(digits), '0');
    for (int k = 0; k < digits; ++k) {
        int nibble = static_cast<int>((words_[static_cast<std::size_t>(k / 16)] >> (4 * (k % 16))) & 0xF);
        out[static_cast<std::size_t>(digits - 1 - k)] = kDigits[nibble];
    }
    return out;
}

bool operator<(const BinaryGridFunction& a, const BinaryGridFunction& b) {
    if (a.dims_ != b.dims_) {
        return a.dims_ < b.dims_;
    }
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff != 0) {
            // The first differing bit decides; a 0 there sorts first.
            std::uint64_t lowest = diff & (~diff + 1);
            return (a.words_[i] & lowest) == 0;
        }
    }
    return false;
}

BinaryGridFunction from_line(const Line& line, const GridDims& dims, Side side) {
    return from_coefficients(line.a0(), line.a1(), line.a2(), dims, side);
}

BinaryGridFunction from_coefficients(std::int64_t a0, std::int64_t a1, std::int64_t a2,
                                     const GridDims& dims, Side side) {
    if (a1 == 0 && a2 == 0) {
        throw std::invalid_argument("degenerate line: a1 and a2 are both zero");
    }
    BinaryGridFunction f(dims, false);
    for (int i = 0; i < dims.size(); ++i) {
        IntPoint p = f.point(i);
        __int128 lhs = static_cast<__int128>(a1) * p.x + static_cast<__int128>(a2) * p.y;
        bool zero = side == Side::le ? lhs <= a0 : lhs > a0;
        f.set(i, !zero);
    }
    return f;
}

bool is_threshold(const BinaryGridFunction& f) {
    if (f.is_constant()) {
        return true;
    }
    auto h0 = convex_hull(f.zeros());
    auto h1 = convex_hull(f.ones());
    return !hulls_intersect(h0, h1);
}

std::vector<BinaryGridFunction> enumerate_threshold(const GridDims& dims) {
    const auto pts = all_points(dims);
    std::vector<BinaryGridFunction> out;
    out.emplace_back(dims, false);
    out.emplace_back(dims, true);

    std::vector<std::pair<std::int64_t, int>> keyed(pts.size());
    for (int i = -(dims.m() - 1); i < dims.m(); ++i) {
        for (int j = -(dims.n() - 1); j < dims.n(); ++j) {
            if (gcd(i, j) != 1) {
                continue;
            }
            // Normal of the primitive direction (i, j).
            const std::int64_t w1 = -j;
            const std::int64_t w2 = i;
            for (std::size_t k = 0; k < pts.size(); ++k) {
                keyed[k] = {w1 * pts[k].x + w2 * pts[k].y, static_cast<int>(k)};
            }
            std::sort(keyed.begin(), keyed.end());
            BinaryGridFunction f(dims, true);
            for (std::size_t k = 0; k + 1 < keyed.size(); ++k) {
                f.set(keyed[k].second, false);
                if (keyed[k].first != keyed[k + 1].first) {
                    out.push_back(f);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::int64_t brute_force_threshold_count(const GridDims& dims) {
    if (dims.size() > 20) {
        throw std::length_error("brute_force_threshold_count: m*n must be at most 20");
    }
    const std::uint64_t total = std::uint64_t{1} << dims.size();
    std::int64_t count = 0;
    BinaryGridFunction f(dims, false);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (int i = 0; i < dims.size(); ++i) {
            f.set(i, (bits >> i) & 1U);
        }
        if (is_threshold(f)) {
            ++count;
        }
    }
    return count;
}

std::int64_t adjacent_pairs_count(const GridDims& dims) {
    const auto pts = all_points(dims);
    std::int64_t count = 0;
    for (const auto& p : pts) {
        for (const auto& q : pts) {
            if (p != q && gcd(q.x - p.x, q.y - p.y) == 1) {
                ++count;
            }
        }
    }
    return count;
}

std::int64_t lines_through_point(const GridDims& dims, const IntPoint& p) {
    if (p.x < 0 || p.y < 0 || p.x >= dims.m() || p.y >= dims.n()) {
        throw std::out_of_range("lines_through_point: point outside the grid");
    }
    std::vector<Line> lines;
    for (const auto& q : all_points(dims)) {
        if (q != p) {
            lines.push_back(Line::through(p, q));
        }
    }
    std::sort(lines.begin(), lines.end());
    return std::unique(lines.begin(), lines.end()) - lines.begin();
}

std::int64_t points_on_line(const GridDims& dims, const Line& line) {
    std::int64_t count = 0;
    for (const auto& p : all_points(dims)) {
        if (line.contains(p)) ++count;
    }
    return count;
}

std::vector<Line> grid_lines(const GridDims& dims) {
    const auto pts = all_points(dims);
    std::vector<Line> lines;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            lines.push_back(Line::through(pts[a], pts[b]));
        }
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return lines;
}

bool row_major_less(const IntPoint& a, const IntPoint& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

}  // namespace thresh2d
