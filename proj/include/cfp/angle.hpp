#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "cfp/rational.hpp"

namespace cfp {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Planar angle, normalized to [0, 2pi). Two representations share the type:
/// an exact rational number of turns (value = num/den of a full turn), or a
/// plain double in radians. Sums, differences and rational scalings of two
/// exact angles stay exact; anything touching a radians angle degrades to
/// radians.
class Angle {
public:
    Angle() : exact_(true), turns_(0, 1) {}

    static Angle turns(const Rational& t) {
        Angle a;
        a.exact_ = true;
        a.turns_ = t.mod1();
        return a;
    }
    static Angle turns(long long num, long long den) { return turns(Rational(num, den)); }

    static Angle radians(double r) {
        Angle a;
        a.exact_ = false;
        a.rad_ = wrap(r);
        return a;
    }

    bool exact() const { return exact_; }
    const Rational& turns_exact() const { return turns_; }

    double radians() const { return exact_ ? turns_.value() * kTwoPi : rad_; }
    double turns_value() const { return exact_ ? turns_.value() : rad_ / kTwoPi; }

    Angle operator+(const Angle& o) const {
        if (exact_ && o.exact_) return turns(turns_ + o.turns_);
        return radians(radians() + o.radians());
    }
    Angle operator-(const Angle& o) const {
        if (exact_ && o.exact_) return turns(turns_ - o.turns_);
        return radians(radians() - o.radians());
    }
    Angle scaled(const Rational& k) const {
        if (exact_) return turns(turns_ * k);
        return radians(radians() * k.value());
    }

    /// Strict ordering by normalized value; exact when both sides are exact.
    bool operator<(const Angle& o) const {
        if (exact_ && o.exact_) return turns_ < o.turns_;
        return radians() < o.radians();
    }

    /// "p/q pi" in lowest terms when exact, else 12 significant digits.
    std::string str() const {
        if (exact_) {
            Rational half_turns = turns_ * Rational(2, 1);
            if (half_turns.num() == 0) return "0";
            if (half_turns.den() == 1 && half_turns.num() == 1) return "pi";
            if (half_turns.den() == 1) return half_turns.str() + "*pi";
            return half_turns.str() + " pi";
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12g", rad_);
        return buf;
    }

private:
    static double wrap(double r) {
        r = std::fmod(r, kTwoPi);
        if (r < 0) r += kTwoPi;
        if (r >= kTwoPi) r = 0.0;  // fmod rounding at the seam
        return r;
    }

    bool exact_;
    Rational turns_;
    double rad_ = 0.0;
};

/// Comparison with wraparound at a full turn: |a-b| <= eps*max(1,|a|,|b|),
/// measured on the shorter arc. Exact equality when both sides are exact.
inline bool angle_eq(const Angle& a, const Angle& b, double eps) {
    if (a.exact() && b.exact()) return a.turns_exact() == b.turns_exact();
    double x = a.radians(), y = b.radians();
    double d = std::fabs(x - y);
    d = std::min(d, kTwoPi - d);
    return d <= eps * std::max({1.0, std::fabs(x), std::fabs(y)});
}

inline bool angle_is_zero(const Angle& a, double eps) {
    return angle_eq(a, Angle::turns(0, 1), eps);
}

}  // namespace cfp
