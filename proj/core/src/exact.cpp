#include "thresh2d/exact.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace thresh2d {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    std::uint64_t x = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    std::uint64_t y = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (y != 0) {
        std::uint64_t r = x % y;
        x = y;
        y = r;
    }
    return static_cast<std::int64_t>(x);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(boost::multiprecision::abs(a), boost::multiprecision::abs(b));
}

int sign(const BigInt& v) {
    return v.sign();
}

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

void Rat::normalize() {
    if (den_ == 0) {
        throw std::domain_error("Rat: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigInt Rat::to_integer() const {
    if (den_ != 1) {
        throw std::domain_error("Rat: " + str() + " is not an integer");
    }
    return num_;
}

double Rat::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rat::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

std::string Rat::decimal(int digits) const {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    BigInt a = boost::multiprecision::abs(num_) * scale;
    BigInt q = a / den_;
    BigInt r = a % den_;
    if (2 * r >= den_) {
        q += 1;
    }
    std::string body = q.str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (num_ < 0 && q != 0 ? "-" : "") + body;
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat& Rat::operator+=(const Rat& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
    if (rhs.num_ == 0) {
        throw std::domain_error("Rat: division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

Rat abs(const Rat& r) {
    return r.sign() < 0 ? -r : r;
}

}  // namespace thresh2d
