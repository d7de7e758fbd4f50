#include "flagein/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace flagein {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
    if (text.find('/') != std::string::npos) {
        Rat q;
        if (q.set_str(text, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + text + "'");
        q.canonicalize();
        return q;
    }
    if (text.rfind("2^", 0) == 0) {
        long e = std::strtol(text.c_str() + 2, nullptr, 10);
        return pow2(e);
    }
    // decimal or scientific literal
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::strtol(s.c_str() + epos + 1, nullptr, 10);
        s = s.substr(0, epos);
    }
    auto dot = s.find('.');
    std::string digits = s;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        exp10 -= static_cast<long>(s.size() - dot - 1);
    }
    if (digits.empty()) throw std::invalid_argument("parse_rat: bad number '" + text + "'");
    for (char ch : digits)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("parse_rat: bad number '" + text + "'");
    Rat q = Rat(Int(digits)) * pow10(exp10);
    return neg ? Rat(-q) : q;
}

std::string decimal_string(const Rat& q, int significant_digits) {
    if (q == 0) return "0";
    Rat a = rat_abs(q);
    // find e with 10^e <= a < 10^(e+1)
    long e = 0;
    if (a >= 1) {
        while (a >= pow10(e + 1)) ++e;
    } else {
        while (a < pow10(e)) --e;
    }
    long shift = significant_digits - 1 - e;
    Rat scaled = a * pow10(shift);
    Int digits = rat_floor(scaled + make_rat(1, 2));
    std::string ds = digits.get_str();
    if (static_cast<int>(ds.size()) > significant_digits) {  // rounded up to next power
        ds = ds.substr(0, significant_digits);
        ++e;
    }
    std::string out;
    if (e >= 0 && e < significant_digits) {
        out = ds.substr(0, e + 1);
        std::string frac = ds.substr(e + 1);
        if (!frac.empty()) out += "." + frac;
    } else {
        out = ds.substr(0, 1);
        if (ds.size() > 1) out += "." + ds.substr(1);
        out += "e" + std::to_string(e);
    }
    return (sgn(q) < 0 ? "-" : "") + out;
}

namespace {
// Simplest rational in [lo, hi] for 0 <= lo <= hi via the Stern-Brocot walk.
Rat simplest_nonneg(const Rat& lo, const Rat& hi) {
    Int fl = rat_floor(lo);
    if (Rat(fl) == lo) return lo;           // lo itself is an integer
    if (Rat(fl + 1) <= hi) return Rat(fl + 1);
    Rat tail = simplest_nonneg(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
    return Rat(fl) + Rat(1) / tail;
}
}  // namespace

Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
    if (sgn(hi) < 0) return -simplest_nonneg(-hi, -lo);
    return simplest_nonneg(lo, hi);
}

}  // namespace flagein
