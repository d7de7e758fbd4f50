#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagein/interval.hpp"
#include "flagein/rational.hpp"

namespace flagein {

// Dense univariate polynomial over Q. coeffs[i] is the coefficient of x^i;
// the leading coefficient is nonzero unless the polynomial is zero (empty).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rat& v) { return UniPoly({v}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& coeff(int i) const;
    const Rat& lc() const;

    Rat eval(const Rat& x) const;
    RInterval eval(const RInterval& x, unsigned bits = 256) const;
    int sign_at(const Rat& x) const { return sgn(eval(x)); }

    UniPoly derivative() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Quotient and remainder over Q; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;

    // Integer-primitive form with positive leading coefficient.
    UniPoly primitive() const;
    // Rational content c such that *this == c * primitive() (zero poly -> 0).
    Rat content() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'), integer-primitive, positive leading coefficient.
UniPoly squarefree(const UniPoly& p);

// All rational roots of p, ascending, each listed once.
std::vector<Rat> rational_roots(const UniPoly& p);

// Exact division; throws if the division leaves a remainder.
UniPoly divide_exact(const UniPoly& p, const UniPoly& d);

// Power-of-two bound M with all real roots of p inside (-M, M).
Rat cauchy_bound(const UniPoly& p);

struct IsolatingInterval {
    Rat lo, hi;  // open interval, sign(p(lo)) != sign(p(hi)), one root inside
};

// Sturm sequence of a square-free polynomial (integer-primitive entries).
class SturmSequence {
  public:
    explicit SturmSequence(const UniPoly& p);
    // Number of real roots in (a, b], a < b, assuming p(a) != 0 != p(b).
    int count_roots(const Rat& a, const Rat& b) const;
    int variations_at(const Rat& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

  private:
    std::vector<UniPoly> seq_;
};

// Disjoint isolating intervals for all real roots of square-free p,
// ascending order.
std::vector<IsolatingInterval> sturm_isolate(const UniPoly& p);

// Shrinks the interval by bisection until its width is <= eps.
IsolatingInterval refine(const UniPoly& p, IsolatingInterval iv, const Rat& eps);

}  // namespace flagein
