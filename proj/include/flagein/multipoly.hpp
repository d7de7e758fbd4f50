#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "flagein/rational.hpp"
#include "flagein/unipoly.hpp"

namespace flagein {

// Variable context for multivariate polynomials. The variable order *is*
// the lex precedence: vars[0] is the highest variable.
struct Ring {
    std::vector<std::string> vars;
    explicit Ring(std::vector<std::string> v) : vars(std::move(v)) {}
    int nvars() const { return static_cast<int>(vars.size()); }
    int index_of(const std::string& name) const;
};
using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<Ring>(std::move(vars));
}

constexpr int kMaxVars = 8;

// Exponent vector. Negative exponents are allowed while assembling Laurent
// expressions (Ricci terms); Groebner-side code requires nonnegative ones.
struct Monomial {
    std::array<int16_t, kMaxVars> e{};

    int degree() const {
        int d = 0;
        for (int v : e) d += v;
        return d;
    }
    bool is_one() const {
        for (int v : e)
            if (v != 0) return false;
        return true;
    }
    bool nonnegative() const {
        for (int v : e)
            if (v < 0) return false;
        return true;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
        return r;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// lex: compare exponents from the highest variable down
inline int lex_cmp(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

struct Term {
    Monomial m;
    Rat c;
};

class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly constant(RingPtr ring, const Rat& v);
    static MultiPoly variable(RingPtr ring, int var, int exp = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int nterms() const { return static_cast<int>(t_.size()); }
    const Term& leading() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& s) const;
    MultiPoly operator-() const { return *this * Rat(-1); }
    bool operator==(const MultiPoly& o) const;

    MultiPoly mul_term(const Monomial& m, const Rat& c) const;

    // Substitutes an exact rational for one variable. Requires nonnegative
    // exponents in that variable.
    MultiPoly substitute(int var, const Rat& value) const;

    // Multiplies by the monomial that clears all negative exponents.
    MultiPoly clear_denominators() const;

    // Integer-primitive form with positive leading coefficient.
    MultiPoly primitive_int() const;

    // Divides out the common monomial factor of all terms.
    MultiPoly strip_monomial_content() const;

    int degree_in(int var) const;
    bool supported_only_on(int var) const;
    UniPoly to_unipoly(int var) const;

    // Coefficients as polynomials in the remaining variables, indexed by
    // the exponent of `var`.
    std::map<int, MultiPoly> coefficients_in(int var) const;

    // Exact division by (x_a - x_b); throws if not divisible.
    MultiPoly divide_by_var_difference(int var_a, int var_b) const;

    // Rebuilds the polynomial in another ring; every variable with a
    // nonzero exponent must exist there (matched by name).
    MultiPoly transport(const RingPtr& target) const;

    std::string str() const;

    // terms sorted descending lex; invariant maintained by all operations
    void set_terms(std::vector<Term> terms);

  private:
    void normalize();
    RingPtr ring_;
    std::vector<Term> t_;
};

}  // namespace flagein
