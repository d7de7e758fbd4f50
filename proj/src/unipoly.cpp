#include "flagein/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace flagein {

namespace {
const Rat kZero(0);
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rat& UniPoly::lc() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RInterval UniPoly::eval(const RInterval& x, unsigned bits) const {
    RInterval acc{Rat(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = ((acc * x) + *it).shrinkwrap(bits);
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rat> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    std::vector<Rat> r = c_;
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("UniPoly::divrem: division by zero");
    std::vector<Rat> rem = c_;
    int dd = d.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<Rat> quot(degree() - dd + 1, Rat(0));
    for (int i = degree(); i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / d.lc();
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.coeff(j);
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

Rat UniPoly::content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& v : c_) {
        if (v == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    Rat c = make_rat(num_gcd, den_lcm);
    return sgn(lc()) < 0 ? Rat(-c) : c;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return UniPoly();
    Rat c = content();
    std::vector<Rat> r = c_;
    for (auto& v : r) v /= c;
    return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& v = coeff(i);
        if (v == 0) continue;
        if (!first) os << (sgn(v) > 0 ? " + " : " - ");
        else if (sgn(v) < 0) os << "-";
        first = false;
        Rat a = rat_abs(v);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a.primitive(), g = b.primitive();
    while (!g.is_zero()) {
        UniPoly r = f.divrem(g).second.primitive();
        f = g;
        g = r;
    }
    return f;
}

UniPoly squarefree(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree: zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rat(1));
    UniPoly g = gcd(p, p.derivative());
    return divide_exact(p, g).primitive();
}

UniPoly divide_exact(const UniPoly& p, const UniPoly& d) {
    auto [q, r] = p.divrem(d);
    if (!r.is_zero()) throw std::invalid_argument("divide_exact: remainder is nonzero");
    return q;
}

Rat cauchy_bound(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat v = rat_abs(p.coeff(i) / p.lc());
        if (v > m) m = v;
    }
    Rat bound = m + 1;
    Rat b(1);
    while (b < bound) b *= 2;
    return b;
}

std::vector<Rat> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rat> roots;
    UniPoly q = squarefree(p);
    if (q.coeff(0) == 0) {
        roots.emplace_back(0);
        std::vector<Rat> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = UniPoly(std::move(shifted));
    }
    if (q.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    // A rational root u/v in lowest terms has v | lc. Refine each isolating
    // interval below 1/lc^2 so it contains at most one rational with
    // denominator <= lc; that candidate is the simplest rational inside.
    UniPoly qi = q.primitive();
    Int lead = qi.lc().get_num();
    Rat eps = make_rat(Int(1), lead * lead) / 4;
    for (auto iv : sturm_isolate(qi)) {
        auto r = refine(qi, iv, eps);
        Rat cand = simplest_rational_in(r.lo, r.hi);
        if (qi.eval(cand) == 0) roots.push_back(cand);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

SturmSequence::SturmSequence(const UniPoly& p) {
    UniPoly f = p.primitive();
    if (f.is_zero()) throw std::invalid_argument("SturmSequence: zero polynomial");
    seq_.push_back(f);
    UniPoly g = f.derivative();
    while (!g.is_zero()) {
        seq_.push_back(g.primitive() * Rat(sgn(g.lc()) > 0 ? 1 : -1));
        UniPoly r = seq_[seq_.size() - 2].divrem(seq_.back()).second;
        // next entry is -r, rescaled by a positive constant only (signs matter)
        if (r.is_zero()) break;
        g = r.primitive() * Rat(sgn(r.lc()) > 0 ? -1 : 1);
    }
}

int SturmSequence::variations_at(const Rat& x) const {
    int var = 0, prev = 0;
    for (const auto& s : seq_) {
        int sg = s.sign_at(x);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

int SturmSequence::variations_at_neg_inf() const {
    int var = 0, prev = 0;
    for (const auto& s : seq_) {
        int sg = sgn(s.lc());
        if (s.degree() % 2 == 1) sg = -sg;
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

int SturmSequence::variations_at_pos_inf() const {
    int var = 0, prev = 0;
    for (const auto& s : seq_) {
        int sg = sgn(s.lc());
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

int SturmSequence::count_roots(const Rat& a, const Rat& b) const {
    return variations_at(a) - variations_at(b);
}

namespace {

void isolate_rec(const UniPoly& p, const SturmSequence& st, Rat lo, Rat hi, int nroots,
                 std::vector<IsolatingInterval>& out) {
    if (nroots == 0) return;
    if (nroots == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rat mid = (lo + hi) / 2;
    // nudge the cut point off a root
    Rat step = (hi - lo) / 4;
    while (p.sign_at(mid) == 0) {
        mid += step;
        step /= 2;
    }
    int left = st.count_roots(lo, mid);
    isolate_rec(p, st, lo, mid, left, out);
    isolate_rec(p, st, mid, hi, nroots - left, out);
}

}  // namespace

std::vector<IsolatingInterval> sturm_isolate(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_isolate: zero polynomial");
    std::vector<IsolatingInterval> out;
    if (p.degree() < 1) return out;
    SturmSequence st(p);
    Rat bound = cauchy_bound(p);
    int total = st.count_roots(-bound, bound);
    isolate_rec(p, st, -bound, bound, total, out);
    return out;
}

IsolatingInterval refine(const UniPoly& p, IsolatingInterval iv, const Rat& eps) {
    int slo = p.sign_at(iv.lo);
    int shi = p.sign_at(iv.hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("refine: endpoints do not bracket a simple root");
    while (iv.hi - iv.lo > eps) {
        Rat mid = (iv.lo + iv.hi) / 2;
        int sm = p.sign_at(mid);
        if (sm == 0) {
            // exact hit: bracket tightly around the root
            Rat h = eps / 4;
            iv.lo = mid - h;
            iv.hi = mid + h;
            break;
        }
        if (sm == slo) iv.lo = mid;
        else iv.hi = mid;
    }
    return iv;
}

}  // namespace flagein
