#include "flagein/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

namespace flagein {

namespace {

// f -> f - (t / lt(g)) * g for the given term t of f
void reduce_step(MultiPoly& f, const Term& t, const MultiPoly& g) {
    Monomial q = t.m / g.leading().m;
    Rat c = t.c / g.leading().c;
    f = f - g.mul_term(q, c);
}

std::optional<size_t> find_reducer(const Term& t, const std::vector<MultiPoly>& basis,
                                   const std::vector<bool>* alive, size_t skip) {
    for (size_t i = 0; i < basis.size(); ++i) {
        if (i == skip) continue;
        if (alive && !(*alive)[i]) continue;
        if (basis[i].is_zero()) continue;
        if (basis[i].leading().m.divides(t.m)) return i;
    }
    return std::nullopt;
}

MultiPoly full_reduce(MultiPoly f, const std::vector<MultiPoly>& basis, const std::vector<bool>* alive,
                      size_t skip = static_cast<size_t>(-1)) {
    MultiPoly rem(f.ring());
    while (!f.is_zero()) {
        Term lt = f.leading();
        auto idx = find_reducer(lt, basis, alive, skip);
        if (idx) {
            reduce_step(f, lt, basis[*idx]);
        } else {
            MultiPoly single(f.ring());
            single.set_terms({lt});
            rem = rem + single;
            f = f - single;
        }
    }
    return rem;
}

}  // namespace

MultiPoly normal_form(MultiPoly f, const std::vector<MultiPoly>& basis) {
    return full_reduce(std::move(f), basis, nullptr);
}

GroebnerBasis buchberger(std::vector<MultiPoly> gens) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
    RingPtr ring = gens.front().ring();
    for (auto& g : gens) {
        if (g.ring()->vars != ring->vars) throw std::invalid_argument("buchberger: mixed rings");
        for (const auto& t : g.terms())
            if (!t.m.nonnegative()) throw std::invalid_argument("buchberger: negative exponent");
    }

    std::vector<MultiPoly> basis;
    std::vector<bool> alive;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(g.primitive_int());
        alive.push_back(true);
    }
    if (basis.empty()) throw std::invalid_argument("buchberger: all generators are zero");

    struct Pair {
        Monomial lcm;
        size_t i, j;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        int c = lex_cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<size_t, size_t>> done;

    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            if (!alive[i]) continue;
            queue.insert({Monomial::lcm(basis[i].leading().m, basis[k].leading().m), i, k});
        }
    };
    for (size_t k = 1; k < basis.size(); ++k) push_pairs_for(k);

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        done.insert({p.i, p.j});
        if (!alive[p.i] || !alive[p.j]) continue;
        const Monomial &mi = basis[p.i].leading().m, &mj = basis[p.j].leading().m;
        // product criterion
        if (Monomial::lcm(mi, mj) == mi * mj) continue;
        // chain criterion: lt(k) divides the lcm and both companion pairs
        // were already treated
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j || !alive[k]) continue;
            if (!basis[k].leading().m.divides(p.lcm)) continue;
            auto ik = std::minmax(p.i, k), jk = std::minmax(p.j, k);
            if (done.count({ik.first, ik.second}) && done.count({jk.first, jk.second})) skip = true;
        }
        if (skip) continue;

        const MultiPoly &f = basis[p.i], &g = basis[p.j];
        Monomial qf = p.lcm / f.leading().m, qg = p.lcm / g.leading().m;
        MultiPoly s = f.mul_term(qf, Rat(1) / f.leading().c) - g.mul_term(qg, Rat(1) / g.leading().c);

        MultiPoly rem = full_reduce(std::move(s), basis, &alive);
        if (rem.is_zero()) continue;
        rem = rem.primitive_int();
        size_t k = basis.size();
        basis.push_back(rem);
        alive.push_back(true);
        for (size_t i = 0; i < k; ++i)
            if (alive[i] && rem.leading().m.divides(basis[i].leading().m) &&
                !(rem.leading().m == basis[i].leading().m))
                alive[i] = false;
        push_pairs_for(k);
    }

    // minimal basis: drop elements whose leading term is divisible by another's
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (!alive[i]) continue;
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || !alive[j]) continue;
            const Monomial &a = basis[i].leading().m, &b = basis[j].leading().m;
            if (a == b) redundant = j < i;
            else if (b.divides(a)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail reduction to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            MultiPoly red = full_reduce(minimal[i], minimal, nullptr, i);
            if (red.is_zero()) {
                minimal.erase(minimal.begin() + i);
                changed = true;
                break;
            }
            red = red.primitive_int();
            if (!(red == minimal[i])) {
                minimal[i] = red;
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return lex_cmp(a.leading().m, b.leading().m) < 0; });
    return GroebnerBasis{ring, std::move(minimal)};
}

UniPoly eliminate(const GroebnerBasis& gb, int var) {
    const MultiPoly* best = nullptr;
    for (const auto& p : gb.polys) {
        if (!p.supported_only_on(var)) continue;
        if (!best || p.degree_in(var) < best->degree_in(var)) best = &p;
    }
    if (!best)
        throw EliminationError("eliminate: no univariate member in '" + gb.ring->vars[var] +
                               "' (positive-dimensional branch?)");
    return best->to_unipoly(var).primitive();
}

}  // namespace flagein
