#pragma once

#include <stdexcept>
#include <string>

#include "flagein/rational.hpp"

namespace flagein {

// Closed interval with rational endpoints. Arithmetic is exact; callers
// that need to keep endpoint sizes bounded round outward to a dyadic grid
// with shrinkwrap(). 256 fractional bits is the default everywhere.
struct RInterval {
    Rat lo, hi;

    RInterval() : lo(0), hi(0) {}
    explicit RInterval(const Rat& v) : lo(v), hi(v) {}
    RInterval(const Rat& l, const Rat& h) : lo(l), hi(h) {
        if (lo > hi) throw std::invalid_argument("RInterval: lo > hi");
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool positive() const { return sgn(lo) > 0; }

    // max |x| over the interval
    Rat mag() const {
        Rat a = rat_abs(lo), b = rat_abs(hi);
        return a > b ? a : b;
    }

    RInterval shrinkwrap(unsigned bits = 256) const {
        return RInterval(dyadic_floor(lo, bits), dyadic_ceil(hi, bits));
    }

    std::string str() const { return "[" + rat_string(lo) + ", " + rat_string(hi) + "]"; }
};

inline RInterval operator+(const RInterval& a, const RInterval& b) {
    return RInterval(a.lo + b.lo, a.hi + b.hi);
}

inline RInterval operator-(const RInterval& a, const RInterval& b) {
    return RInterval(a.lo - b.hi, a.hi - b.lo);
}

inline RInterval operator-(const RInterval& a) { return RInterval(-a.hi, -a.lo); }

inline RInterval operator*(const RInterval& a, const RInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = p1, hi = p1;
    for (const Rat* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return RInterval(lo, hi);
}

inline RInterval operator*(const Rat& c, const RInterval& a) { return RInterval(c) * a; }

inline RInterval inv(const RInterval& a) {
    if (a.contains_zero()) throw std::domain_error("RInterval: inverse of interval containing 0");
    return RInterval(Rat(1) / a.hi, Rat(1) / a.lo);
}

inline RInterval operator/(const RInterval& a, const RInterval& b) { return a * inv(b); }

inline RInterval operator+(const RInterval& a, const Rat& c) { return a + RInterval(c); }
inline RInterval operator-(const RInterval& a, const Rat& c) { return a - RInterval(c); }

}  // namespace flagein
