#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "tangokv/errors.hpp"

namespace tangokv {

/// Exact rational number on a 64-bit integer pair, always in lowest terms
/// with positive denominator. Intermediate products go through 128-bit
/// integers and overflow of the reduced result is a hard error, never a
/// silent wrap.
class Rat {
  public:
    Rat() : n_(0), d_(1) {}
    Rat(long long n) : n_(n), d_(1) {}
    Rat(long long n, long long d) : n_(n), d_(d) { normalize_small(); }

    long long num() const { return n_; }
    long long den() const { return d_; }

    bool is_zero() const { return n_ == 0; }
    bool is_integer() const { return d_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.n_) * b.d_ + i128(b.n_) * a.d_, i128(a.d_) * b.d_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(i128(a.n_) * b.d_ - i128(b.n_) * a.d_, i128(a.d_) * b.d_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.n_) * b.n_, i128(a.d_) * b.d_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.n_ == 0) throw ArithmeticOverflow("Rat: division by zero");
        return make(i128(a.n_) * b.d_, i128(a.d_) * b.n_);
    }
    Rat operator-() const { return Rat(-n_, d_); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.n_) * b.d_ < i128(b.n_) * a.d_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    /// Floor toward negative infinity.
    long long floor() const {
        long long q = n_ / d_;
        if (n_ % d_ != 0 && n_ < 0) --q;
        return q;
    }
    long long ceil() const { return -((-*this).floor()); }
    /// Fractional part {x} = x - floor(x), in [0, 1).
    Rat frac() const { return *this - Rat(floor()); }
    Rat abs() const { return n_ < 0 ? -*this : *this; }

    std::string str() const {
        if (d_ == 1) return std::to_string(n_);
        return std::to_string(n_) + "/" + std::to_string(d_);
    }

    /// Parses "n" or "n/d".
    static Rat parse(const std::string& s) {
        auto pos = s.find('/');
        try {
            if (pos == std::string::npos) return Rat(std::stoll(s));
            return Rat(std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 1)));
        } catch (const std::exception&) {
            throw ParseError("bad rational literal: '" + s + "'");
        }
    }

  private:
    using i128 = __int128;

    static Rat make(i128 n, i128 d) {
        if (d == 0) throw ArithmeticOverflow("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lo = -i128(0x7fffffffffffffffLL) - 1;
        constexpr i128 hi = i128(0x7fffffffffffffffLL);
        if (n < lo || n > hi || d > hi)
            throw ArithmeticOverflow("Rat: value does not fit in 64 bits");
        Rat r;
        r.n_ = (long long)n;
        r.d_ = (long long)d;
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    void normalize_small() {
        Rat r = make(n_, d_);
        n_ = r.n_;
        d_ = r.d_;
    }

    long long n_;
    long long d_;
};

} // namespace tangokv
