#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace thresh2d {

using BigInt = boost::multiprecision::cpp_int;

/// Greatest common divisor of |a| and |b|; gcd(0, 0) == 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);
BigInt gcd(const BigInt& a, const BigInt& b);

/// Sign of an integer as -1, 0 or +1.
int sign(const BigInt& v);

/**
 * Exact rational number.
 *
 * Always stored reduced with a positive denominator, so two Rats compare
 * equal iff their (num, den) pairs are identical.
 */
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rat(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return thresh2d::sign(num_); }

    /// Integer value; throws std::domain_error if not integral.
    BigInt to_integer() const;
    double to_double() const;

    /// "p/q", or "p" when integral.
    std::string str() const;
    /// Fixed-point decimal rendering with `digits` fractional digits (rounded half away from zero).
    std::string decimal(int digits) const;

    Rat operator-() const;
    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    Rat& operator/=(const Rat& rhs);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat abs(const Rat& r);

}  // namespace thresh2d
