#include "thresh2d/formulas.hpp"

#include <cstdlib>
#include <limits>

namespace thresh2d {

namespace {

std::int64_t small(const BigInt& v, const char* what) {
    if (v > std::numeric_limits<std::int32_t>::max()) {
        throw std::invalid_argument(std::string("f_sum: ") + what + " too large");
    }
    return v.convert_to<std::int64_t>();
}

BigInt exact_integer(const Rat& v, const char* what) {
    if (!v.is_integer()) {
        throw InconsistencyError(std::string(what) + " is not integral: " + v.str());
    }
    return v.num();
}

BigInt count(const Rat& v, const char* what) {
    BigInt r = exact_integer(v, what);
    if (r < 0) {
        throw InconsistencyError(std::string(what) + " is negative: " + r.str());
    }
    return r;
}

Rat half(const BigInt& v) {
    return Rat(v, 2);
}

Rat quarter(const BigInt& v) {
    return Rat(v, 4);
}

}  // namespace

GridDims::GridDims(int m, int n) : m_(m), n_(n) {
    if (m < 2 || n < 2) {
        throw std::invalid_argument("grid dimensions must satisfy m >= 2 and n >= 2 (got " +
                                    std::to_string(m) + "x" + std::to_string(n) + ")");
    }
}

BigInt UTable::total() const {
    return cells_[0][0] + cells_[0][1] + cells_[1][0] + cells_[1][1];
}

Rat f_sum(int q, const Rat& mx, const Rat& nx) {
    if (q < 1) {
        throw std::invalid_argument("f_sum: q must be positive");
    }
    if (mx.sign() <= 0 || nx.sign() <= 0) {
        throw std::invalid_argument("f_sum: extents must be positive");
    }
    // (mx - |i|)(nx - |j|) = (a - |i| d1)(b - |j| d2) / (d1 d2)
    const std::int64_t a = small(mx.num(), "mx");
    const std::int64_t d1 = small(mx.den(), "mx");
    const std::int64_t b = small(nx.num(), "nx");
    const std::int64_t d2 = small(nx.den(), "nx");

    __int128 total = 0;
    for (std::int64_t i = 0; i * d1 < a; ++i) {
        for (std::int64_t j = 0; j * d2 < b; ++j) {
            if (gcd(i, j) != q) {
                continue;
            }
            __int128 w = static_cast<__int128>(a - i * d1) * (b - j * d2);
            // (i, j), (-i, j), (i, -j), (-i, -j) are distinct unless a coordinate is zero.
            int mult = (i == 0 ? 1 : 2) * (j == 0 ? 1 : 2);
            total += w * mult;
        }
    }
    BigInt num = 0;
    bool neg = total < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-total) : static_cast<unsigned __int128>(total);
    num = static_cast<std::uint64_t>(mag >> 64);
    num <<= 64;
    num += static_cast<std::uint64_t>(mag);
    if (neg) num = -num;
    return Rat(num, BigInt(d1) * d2);
}

BigInt f_sum(int q, const GridDims& dims) {
    return f_sum(q, Rat(dims.m()), Rat(dims.n())).to_integer();
}

BigInt s_count(const GridDims& dims) {
    BigInt s = 0;
    for (std::int64_t i = 1; i < dims.m(); ++i) {
        for (std::int64_t j = 1; j < dims.n(); ++j) {
            if (gcd(i, j) == 1) {
                s += 1;
            }
        }
    }
    return s;
}

BigInt s_count_from_f1(const GridDims& dims) {
    const int m = dims.m();
    const int n = dims.n();
    Rat acc = f_sum(1, Rat(m), Rat(n)) - f_sum(1, Rat(m - 1), Rat(n)) -
              f_sum(1, Rat(m), Rat(n - 1)) + f_sum(1, Rat(m - 1), Rat(n - 1));
    return exact_integer(acc / Rat(4) - Rat(1), "s(m,n) via f1");
}

BigInt line_count(const GridDims& dims) {
    return count(half(f_sum(1, dims) - f_sum(2, dims)), "l(m,n)");
}

BigInt t_count(const GridDims& dims) {
    return f_sum(1, dims) + 2;
}

std::pair<BigInt, BigInt> t3_t4(const GridDims& dims) {
    BigInt f1 = f_sum(1, dims);
    BigInt f2 = f_sum(2, dims);
    return {2 * f2 + 8, f1 - 2 * f2 - 6};
}

Rat sigma_bar(const GridDims& dims) {
    BigInt f1 = f_sum(1, dims);
    BigInt f2 = f_sum(2, dims);
    return Rat(4 * f1 - 2 * f2, f1 + 2);
}

UTable u_counts(const GridDims& dims) {
    Rat f1_half = f_sum(1, Rat(BigInt(dims.m()), 2), Rat(BigInt(dims.n()), 2));
    Rat f2 = f_sum(2, dims);
    Rat s = s_count(dims);

    UTable u;
    u.at(0, 1) = count(Rat(2) * f1_half + Rat(2) - s, "u01");
    u.at(0, 2) = count(f2 + Rat(2) - Rat(2) * f1_half + s, "u02");
    u.at(1, 2) = u.at(0, 1);
    u.at(1, 1) = u.at(0, 2);
    return u;
}

PlaneStats plane_stats_formula(const GridDims& dims) {
    BigInt f1 = f_sum(1, dims);
    BigInt f2 = f_sum(2, dims);
    BigInt s = s_count(dims);
    PlaneStats p;
    p.c3 = f2 + 4;
    p.c4 = count(half(f1) - Rat(f2) - Rat(3), "c4");
    p.c = count(half(f1) + Rat(1), "c");
    p.e = count(Rat(f1) - half(f2) - Rat(s) - Rat(2), "e");
    p.v = count(half(f1) - half(f2) - Rat(s) - Rat(2), "v");
    p.v_inf = s + 2;
    return p;
}

TriangleStats triangle_stats_formula(const GridDims& dims) {
    BigInt f1 = f_sum(1, dims);
    BigInt f2 = f_sum(2, dims);
    const Rat m = dims.m();
    const Rat n = dims.n();
    const Rat one = 1;
    TriangleStats t;
    t.c3 = count(half(f2) + m + n + one, "triangle c3");
    t.c4 = count(quarter(f1) - half(f2) - m / Rat(2) - n / Rat(2) - one, "triangle c4");
    t.c = count(quarter(f1) + m / Rat(2) + n / Rat(2), "triangle c");
    t.e = count(half(f1) - quarter(f2) + m + n, "triangle e");
    t.v = count(quarter(f1) - quarter(f2) + m / Rat(2) + n / Rat(2) + one, "triangle v");
    return t;
}

CountReport count_report(const GridDims& dims) {
    CountReport r;
    r.f1 = f_sum(1, dims);
    r.f2 = f_sum(2, dims);
    r.s = s_count(dims);
    r.l = line_count(dims);
    r.t = t_count(dims);
    std::tie(r.t3, r.t4) = t3_t4(dims);
    r.sigma_bar = sigma_bar(dims);
    r.u = u_counts(dims);
    return r;
}

std::optional<std::string> check_invariants(const CountReport& r) {
    if (r.t3 + r.t4 != r.t) {
        return "t3 + t4 != t";
    }
    if (r.t == 0 || r.sigma_bar != Rat(3 * r.t3 + 4 * r.t4, r.t)) {
        return "sigma_bar != (3 t3 + 4 t4) / t";
    }
    if (r.u.total() != r.t3) {
        return "u01 + u02 + u11 + u12 != t3";
    }
    for (int nu = 0; nu < 2; ++nu) {
        for (int kappa = 1; kappa <= 2; ++kappa) {
            if (r.u.at(nu, kappa) < 0) {
                return "negative u entry";
            }
            if (r.u.at(nu, kappa) != r.u.at(1 - nu, 3 - kappa)) {
                return "u[nu][kappa] != u[1-nu][3-kappa]";
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_invariants(const PlaneStats& p) {
    if (p.c3 + p.c4 != p.c) return "c3 + c4 != c";
    if (p.v - p.e + p.c != 1) return "v - e + c != 1";
    if (3 * p.c3 + 4 * p.c4 != 2 * p.e + 2 * p.v_inf) return "3 c3 + 4 c4 != 2 e + 2 v_inf";
    return std::nullopt;
}

std::optional<std::string> check_invariants(const TriangleStats& t, const GridDims& dims) {
    if (t.c3 + t.c4 != t.c) return "c3 + c4 != c";
    if (t.v - t.e + t.c != 1) return "v - e + c != 1";
    if (2 * t.e != 3 * t.c3 + 4 * t.c4 + dims.m() + dims.n() + 1) {
        return "2 e != 3 c3 + 4 c4 + m + n + 1";
    }
    return std::nullopt;
}

}  // namespace thresh2d
