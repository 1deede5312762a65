#ifndef COVOL_INTERVAL_HPP
#define COVOL_INTERVAL_HPP

#include "covol/errors.hpp"
#include "covol/rational.hpp"

namespace covol {

// Closed interval with exact rational endpoints. Every operation returns an
// enclosure of the exact image; round_out trims endpoint size to dyadics.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(const Rat& v) : lo(v), hi(v) {}
    RatInterval(const Rat& l, const Rat& h) : lo(l), hi(h) {
        if (lo > hi) fail(Errc::PrecisionExceeded, "inverted interval");
    }
    static RatInterval hull(const RatInterval& a, const RatInterval& b) {
        return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool certainly_positive() const { return lo > 0; }
    bool certainly_negative() const { return hi < 0; }
    bool certainly_less(const Rat& v) const { return hi < v; }
    bool certainly_greater(const Rat& v) const { return lo > v; }

    RatInterval operator-() const { return {-hi, -lo}; }
    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }
    RatInterval operator/(const RatInterval& o) const {
        if (o.lo <= 0 && 0 <= o.hi) fail(Errc::PrecisionExceeded, "division by interval containing 0");
        Rat a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }
    RatInterval& operator+=(const RatInterval& o) { *this = *this + o; return *this; }
    RatInterval& operator*=(const RatInterval& o) { *this = *this * o; return *this; }

    RatInterval abs() const {
        if (lo >= 0) return *this;
        if (hi <= 0) return -*this;
        Rat neg = -lo;
        return {Rat(0), std::max(neg, hi)};
    }
    Rat mag() const { return abs().hi; }

    // shrink endpoint representations to denominator 2^bits, rounding outward
    RatInterval round_out(unsigned bits) const;
};

RatInterval iv_pow(const RatInterval& x, unsigned long e);

} // namespace covol

#endif
