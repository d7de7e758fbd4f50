#include "flagein/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagein {

int Ring::index_of(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars[i] == name) return i;
    throw std::invalid_argument("Ring: unknown variable '" + name + "'");
}

namespace {
void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (a.ring() == b.ring()) return;
    if (a.ring() && b.ring() && a.ring()->vars == b.ring()->vars) return;
    throw std::invalid_argument("MultiPoly: mixed rings");
}
}  // namespace

MultiPoly MultiPoly::constant(RingPtr ring, const Rat& v) {
    MultiPoly p(std::move(ring));
    if (v != 0) p.t_.push_back({Monomial{}, v});
    return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, int var, int exp) {
    if (var < 0 || var >= ring->nvars()) throw std::invalid_argument("MultiPoly::variable: bad index");
    MultiPoly p(std::move(ring));
    Monomial m;
    m.e[var] = static_cast<int16_t>(exp);
    p.t_.push_back({m, Rat(1)});
    return p;
}

const Term& MultiPoly::leading() const {
    if (t_.empty()) throw std::logic_error("MultiPoly::leading: zero polynomial");
    return t_.front();
}

void MultiPoly::normalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return lex_cmp(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().m == t.m) out.back().c += t.c;
        else out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c == 0; }), out.end());
    t_ = std::move(out);
}

void MultiPoly::set_terms(std::vector<Term> terms) {
    t_ = std::move(terms);
    normalize();
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_ring(*this, o);
    MultiPoly r(ring_ ? ring_ : o.ring_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = lex_cmp(t_[i].m, o.t_[j].m);
        if (c > 0) r.t_.push_back(t_[i++]);
        else if (c < 0) r.t_.push_back(o.t_[j++]);
        else {
            Rat s = t_[i].c + o.t_[j].c;
            if (s != 0) r.t_.push_back({t_[i].m, s});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (o * Rat(-1)); }

MultiPoly MultiPoly::mul_term(const Monomial& m, const Rat& c) const {
    MultiPoly r(ring_);
    if (c == 0) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_ring(*this, o);
    MultiPoly acc(ring_ ? ring_ : o.ring_);
    if (is_zero() || o.is_zero()) return acc;
    // multiply the shorter one term by term
    const MultiPoly& big = t_.size() >= o.t_.size() ? *this : o;
    const MultiPoly& small = t_.size() >= o.t_.size() ? o : *this;
    for (const auto& t : small.t_) acc = acc + big.mul_term(t.m, t.c);
    return acc;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
    MultiPoly r(ring_);
    if (s == 0) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.m, t.c * s});
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
}

MultiPoly MultiPoly::substitute(int var, const Rat& value) const {
    MultiPoly r(ring_);
    std::vector<Term> terms;
    for (const auto& t : t_) {
        int e = t.m.e[var];
        if (e < 0) throw std::invalid_argument("substitute: negative exponent");
        Rat c = t.c;
        for (int k = 0; k < e; ++k) c *= value;
        Monomial m = t.m;
        m.e[var] = 0;
        if (c != 0) terms.push_back({m, c});
    }
    r.set_terms(std::move(terms));
    return r;
}

MultiPoly MultiPoly::clear_denominators() const {
    Monomial shift;
    for (const auto& t : t_)
        for (int i = 0; i < kMaxVars; ++i)
            if (-t.m.e[i] > shift.e[i]) shift.e[i] = static_cast<int16_t>(-t.m.e[i]);
    if (shift.is_one()) return *this;
    return mul_term(shift, Rat(1));
}

MultiPoly MultiPoly::primitive_int() const {
    if (is_zero()) return *this;
    Int num_gcd(0), den_lcm(1);
    for (const auto& t : t_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
    }
    Rat content = make_rat(num_gcd, den_lcm);
    if (sgn(leading().c) < 0) content = -content;
    MultiPoly r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.m, t.c / content});
    return r;
}

MultiPoly MultiPoly::strip_monomial_content() const {
    if (is_zero()) return *this;
    Monomial g = t_.front().m;
    for (const auto& t : t_)
        for (int i = 0; i < kMaxVars; ++i) g.e[i] = std::min(g.e[i], t.m.e[i]);
    if (g.is_one()) return *this;
    MultiPoly r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.m / g, t.c});
    return r;
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.m.e[var]));
    return d;
}

bool MultiPoly::supported_only_on(int var) const {
    for (const auto& t : t_)
        for (int i = 0; i < kMaxVars; ++i)
            if (i != var && t.m.e[i] != 0) return false;
    return true;
}

UniPoly MultiPoly::to_unipoly(int var) const {
    if (!supported_only_on(var)) throw std::invalid_argument("to_unipoly: polynomial is not univariate");
    std::vector<Rat> c(degree_in(var) + 1, Rat(0));
    for (const auto& t : t_) c[t.m.e[var]] = t.c;
    return UniPoly(std::move(c));
}

std::map<int, MultiPoly> MultiPoly::coefficients_in(int var) const {
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : t_) {
        Term u = t;
        int e = u.m.e[var];
        u.m.e[var] = 0;
        buckets[e].push_back(u);
    }
    std::map<int, MultiPoly> out;
    for (auto& [e, ts] : buckets) {
        MultiPoly p(ring_);
        p.set_terms(std::move(ts));
        out.emplace(e, std::move(p));
    }
    return out;
}

MultiPoly MultiPoly::divide_by_var_difference(int var_a, int var_b) const {
    // synthetic division by (x_a - x_b): quotient coefficients in x_a are
    // b_k = a_{k+1} + x_b * b_{k+1}
    auto coeffs = coefficients_in(var_a);
    int deg = coeffs.empty() ? 0 : coeffs.rbegin()->first;
    MultiPoly xb = MultiPoly::variable(ring_, var_b);
    std::vector<MultiPoly> a(deg + 1, MultiPoly(ring_));
    for (auto& [e, p] : coeffs) a[e] = p;
    std::vector<MultiPoly> b(std::max(deg, 1), MultiPoly(ring_));
    for (int k = deg - 1; k >= 0; --k) {
        b[k] = a[k + 1] + (k + 1 < deg ? b[k + 1] * xb : MultiPoly(ring_));
    }
    MultiPoly rem = a[0] + (deg >= 1 ? b[0] * xb : MultiPoly(ring_));
    if (!rem.is_zero()) throw std::invalid_argument("divide_by_var_difference: not divisible");
    MultiPoly q(ring_);
    for (int k = 0; k < deg; ++k) {
        Monomial m;
        m.e[var_a] = static_cast<int16_t>(k);
        q = q + b[k].mul_term(m, Rat(1));
    }
    return q;
}

MultiPoly MultiPoly::transport(const RingPtr& target) const {
    std::array<int, kMaxVars> map{};
    map.fill(-1);
    for (int i = 0; i < ring_->nvars(); ++i) {
        for (int j = 0; j < target->nvars(); ++j)
            if (ring_->vars[i] == target->vars[j]) map[i] = j;
    }
    MultiPoly r(target);
    std::vector<Term> terms;
    for (const auto& t : t_) {
        Monomial m;
        for (int i = 0; i < kMaxVars; ++i) {
            if (t.m.e[i] == 0) continue;
            if (i >= ring_->nvars() || map[i] < 0)
                throw std::invalid_argument("transport: variable missing in target ring");
            m.e[map[i]] = t.m.e[i];
        }
        terms.push_back({m, t.c});
    }
    r.set_terms(std::move(terms));
    return r;
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        if (!first) os << (sgn(t.c) > 0 ? " + " : " - ");
        else if (sgn(t.c) < 0) os << "-";
        first = false;
        Rat a = rat_abs(t.c);
        bool printed = false;
        if (a != 1 || t.m.is_one()) {
            os << a.get_str();
            printed = true;
        }
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (printed) os << "*";
            os << ring_->vars[i];
            if (t.m.e[i] != 1) os << "^" << t.m.e[i];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace flagein
