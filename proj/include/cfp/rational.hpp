#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "cfp/errors.hpp"

namespace cfp {

/// Reduced fraction num/den with den > 0. Intermediates are computed in
/// 128-bit; a result that does not fit in 64 bits after reduction throws
/// RationalOverflow.
class Rational {
public:
    Rational() = default;

    Rational(long long num, long long den) {
        if (den == 0) throw Error("Rational: zero denominator");
        __int128 n = num, d = den;
        assign(n, d);
    }

    static Rational integer(long long v) { return Rational(v, 1); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator+(const Rational& o) const {
        return make(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return make(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return make(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Error("Rational: division by zero");
        return make(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    /// Representative in [0, 1); used to normalize angles given in turns.
    Rational mod1() const {
        __int128 n = static_cast<__int128>(num_) % den_;
        if (n < 0) n += den_;
        return make(n, den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Rational make(__int128 n, __int128 d) {
        Rational r;
        r.assign(n, d);
        return r;
    }

    void assign(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) throw RationalOverflow("Rational: 64-bit overflow");
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace cfp
