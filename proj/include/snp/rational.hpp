#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace snp {

// Exact rational arithmetic on an int64 numerator and a positive int64
// denominator, always kept reduced. Intermediate products are carried in
// 128 bits; any result that cannot be narrowed back to 64 bits throws
// std::overflow_error rather than wrapping. Integer-valued operands
// (denominator 1, the common case for unit weights) take fast paths that
// skip the gcd.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design

    Rational(std::int64_t numerator, std::int64_t denominator) {
        if (denominator == 0)
            throw std::invalid_argument("Rational: zero denominator");
        __int128 n = numerator;
        __int128 d = denominator;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        assign_reduced(n, d);
    }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1)
            return from_int128(static_cast<__int128>(a.num_) + b.num_);
        Rational r;
        r.assign_reduced(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    Rational operator-() const {
        Rational r;
        r.num_ = narrow(-static_cast<__int128>(num_));
        r.den_ = den_;
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.num_ == 0 || b.num_ == 0)
            return Rational{};
        if (a.den_ == 1 && b.den_ == 1)
            return from_int128(static_cast<__int128>(a.num_) * b.num_);
        // Cross-reduce before multiplying so intermediates stay small.
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        Rational r;
        r.num_ = narrow(static_cast<__int128>(a.num_ / g1) * (b.num_ / g2));
        r.den_ = narrow(static_cast<__int128>(a.den_ / g2) * (b.den_ / g1));
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::invalid_argument("Rational: division by zero");
        Rational inv;
        if (b.num_ > 0) {
            inv.num_ = b.den_;
            inv.den_ = b.num_;
        } else {
            inv.num_ = narrow(-static_cast<__int128>(b.den_));
            inv.den_ = narrow(-static_cast<__int128>(b.num_));
        }
        return a * inv;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    static std::int64_t narrow(__int128 v) {
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        return static_cast<std::int64_t>(v);
    }

    static Rational from_int128(__int128 v) {
        Rational r;
        r.num_ = narrow(v);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    // Takes an arbitrary 128-bit fraction with d > 0 and stores it reduced.
    void assign_reduced(__int128 n, __int128 d) {
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        const __int128 g = gcd128(n, d);
        num_ = narrow(n / g);
        den_ = narrow(d / g);
    }
};

}  // namespace snp

template <>
struct std::hash<snp::Rational> {
    std::size_t operator()(const snp::Rational& r) const noexcept {
        const std::uint64_t a = static_cast<std::uint64_t>(r.numerator());
        const std::uint64_t b = static_cast<std::uint64_t>(r.denominator());
        std::uint64_t h = a * 0x9e3779b97f4a7c15ULL;
        h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};
