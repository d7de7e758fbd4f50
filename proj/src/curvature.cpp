#include "flagein/curvature.hpp"

#include <stdexcept>

namespace flagein {

BracketSystem bracket_system(const StructureConstants& sc) {
    if (sc.dims.size() != 5) throw std::invalid_argument("bracket_system: expected five dims");
    BracketSystem bs;
    bs.dims = sc.dims;
    bs.coeffs[{0, 1, 2}] = sc.c312;
    bs.coeffs[{1, 1, 3}] = sc.c422;
    bs.coeffs[{1, 2, 4}] = sc.c523;
    bs.coeffs[{0, 3, 4}] = sc.c514;
    return bs;
}

std::pair<Rat, Rat> submersion_constants(const TRootDecomposition& dec) {
    if (dec.pattern != SummandPattern::TypeA5)
        throw std::invalid_argument("submersion_constants: expected five-summand Type A, got " +
                                    pattern_name(dec.pattern));
    Rat d2(dec.dims[1]), d3(dec.dims[2]), d4(dec.dims[3]), d5(dec.dims[4]);
    Rat denom = (d2 + d3) + 4 * (d4 + d5);
    Rat c523 = d3 * (d4 + d5) / denom;
    Rat c422 = d4 * (d2 + d3) / denom;
    return {c523, c422};
}

namespace {

template <class S>
std::vector<S> ricci_generic(const BracketSystem& bs, const std::vector<S>& x,
                             const std::function<S(const S&)>& post) {
    int q = static_cast<int>(bs.dims.size());
    if (static_cast<int>(x.size()) != q)
        throw std::invalid_argument("ricci_components: dimension mismatch");
    std::vector<S> r;
    r.reserve(q);
    for (int k = 0; k < q; ++k) {
        S acc = post(S(Rat(1)) / (S(Rat(2)) * x[k]));
        for (int j = 0; j < q; ++j) {
            for (int i = 0; i < q; ++i) {
                Rat ckji = bs.value(k, j, i);
                if (ckji != 0) {
                    Rat f = ckji / Rat(4 * bs.dims[k]);
                    acc = post(acc + S(f) * (x[k] / (x[j] * x[i])));
                }
                Rat cjki = bs.value(j, k, i);
                if (cjki != 0) {
                    Rat f = cjki / Rat(2 * bs.dims[k]);
                    acc = post(acc - S(f) * (x[j] / (x[k] * x[i])));
                }
            }
        }
        r.push_back(acc);
    }
    return r;
}

}  // namespace

std::vector<Rat> ricci_components(const BracketSystem& bs, const std::vector<Rat>& x) {
    for (const Rat& v : x)
        if (sgn(v) <= 0) throw std::invalid_argument("ricci_components: metric coefficients must be positive");
    return ricci_generic<Rat>(bs, x, [](const Rat& v) { return v; });
}

std::vector<Rat> ricci_components(const StructureConstants& sc, const std::vector<Rat>& x) {
    return ricci_components(bracket_system(sc), x);
}

std::vector<RInterval> ricci_components(const BracketSystem& bs, const std::vector<RInterval>& x,
                                        unsigned bits) {
    for (const RInterval& v : x)
        if (!v.positive())
            throw std::invalid_argument("ricci_components: metric intervals must be positive");
    return ricci_generic<RInterval>(bs, x, [bits](const RInterval& v) { return v.shrinkwrap(bits); });
}

std::vector<RInterval> ricci_components(const StructureConstants& sc, const std::vector<RInterval>& x,
                                        unsigned bits) {
    return ricci_components(bracket_system(sc), x, bits);
}

std::pair<Rat, Rat> ke_normalized_constants(const TRootDecomposition& dec, const Rat& c523,
                                            const Rat& c422, const KEMetric& ke) {
    if (dec.pattern != SummandPattern::TypeA5)
        throw std::invalid_argument("ke_normalized_constants: expected five-summand Type A");
    auto eval = [&](const Rat& c312, const Rat& c514) {
        StructureConstants sc{dec.dims, c312, c422, c523, c514};
        return ricci_components(sc, ke.coeffs);
    };
    // r2 - r3 is affine in c312 alone, r4 - r5 affine in c514 alone
    std::vector<Rat> at00 = eval(Rat(0), Rat(0));
    std::vector<Rat> at10 = eval(Rat(1), Rat(0));
    std::vector<Rat> at01 = eval(Rat(0), Rat(1));
    Rat B = at00[1] - at00[2];
    Rat A = (at10[1] - at10[2]) - B;
    Rat D = at00[3] - at00[4];
    Rat C = (at01[3] - at01[4]) - D;
    if (A == 0 || C == 0)
        throw std::invalid_argument("ke_normalized_constants: singular linear system (degenerate dims)");
    return {-B / A, -D / C};
}

StructureConstants structure_constants(const TRootDecomposition& dec) {
    auto [c523, c422] = submersion_constants(dec);
    KEMetric ke = ke_coefficients(dec, Ordering(dec.pd.b2(), 1));
    auto [c312, c514] = ke_normalized_constants(dec, c523, c422, ke);
    return StructureConstants{dec.dims, c312, c422, c523, c514};
}

namespace {

// squared bracket coefficient sum for ordered root pairs (a in summand i,
// b in summand j), accumulated onto the summand of a+b and of a-b
struct TripleAccumulator {
    const TRootDecomposition& dec;
    const RootSystem& rs;
    std::map<std::vector<int>, int> summand_of;  // kappa -> index

    explicit TripleAccumulator(const TRootDecomposition& d) : dec(d), rs(*d.pd.rs) {
        for (int s = 0; s < dec.summands(); ++s) summand_of[dec.troots[s].coeffs] = s;
    }

    // N^2 for the alpha-chain through beta, Killing-dual normalization
    Rat n_squared(const Root& alpha, const Root& beta) const {
        auto [p, q] = rs.chain(alpha, beta);
        return Rat(q * (1 + p)) / 2 * rs.inner_killing_dual(alpha, alpha);
    }

    // contribution of the ordered pair (a, b) to [summand(a +- b) | ij]
    void accumulate(const Root& a, const Root& b, std::map<int, Rat>& into) const {
        Root sum(a.size()), diff(a.size());
        for (size_t t = 0; t < a.size(); ++t) {
            sum[t] = a[t] + b[t];
            diff[t] = a[t] - b[t];
        }
        if (rs.is_root(sum)) {
            std::vector<int> k = kappa(dec.pd, sum);
            auto it = summand_of.find(k);
            if (it != summand_of.end()) into[it->second] += 2 * n_squared(a, b);
        }
        bool zero = std::all_of(diff.begin(), diff.end(), [](int c) { return c == 0; });
        if (!zero && rs.is_root(diff)) {
            Root pos = diff;
            if (root_sign(diff) < 0)
                for (auto& c : pos) c = -c;
            std::vector<int> k = kappa(dec.pd, pos);
            auto it = summand_of.find(k);
            if (it != summand_of.end()) {
                Root negb(b.size());
                for (size_t t = 0; t < b.size(); ++t) negb[t] = -b[t];
                into[it->second] += 2 * n_squared(a, negb);
            }
        }
    }
};

}  // namespace

std::map<std::array<int, 3>, Rat> chevalley_triples(const TRootDecomposition& dec) {
    const RootSystem& rs = *dec.pd.rs;
    if (rs.rank() > 5)
        throw std::invalid_argument("chevalley_triples: rank cap 5 exceeded (brute-force oracle)");
    TripleAccumulator acc(dec);
    int q = dec.summands();

    // value[i][j][k] computed from the ordered pair definition with the lower
    // pair (i, j); full symmetry is checked before collapsing to triples
    std::map<std::array<int, 3>, Rat> result;
    std::map<std::array<int, 3>, Rat> by_role;  // {i,j,k} as computed with upper k
    for (int i = 0; i < q; ++i) {
        for (int j = i; j < q; ++j) {
            std::map<int, Rat> landed;
            for (const Root& a : dec.members[i]) {
                for (const Root& b : dec.members[j]) {
                    if (i == j && a == b) continue;
                    acc.accumulate(a, b, landed);
                    if (i == j) continue;  // single order across distinct summands
                }
            }
            for (auto& [k, v] : landed) {
                std::array<int, 3> key{i, j, k};
                std::sort(key.begin(), key.end());
                auto it = by_role.find(key);
                if (it == by_role.end()) by_role[key] = v;
                else if (it->second != v)
                    throw std::logic_error("chevalley_triples: symmetry check failed");
            }
        }
    }
    for (auto& [key, v] : by_role)
        if (v != 0) result[key] = v;
    return result;
}

StructureConstants chevalley_oracle(const PaintedDiagram& pd) {
    TRootDecomposition dec = t_root_decomposition(pd);
    if (dec.pattern != SummandPattern::TypeA5)
        throw std::invalid_argument("chevalley_oracle: expected five-summand Type A, got " +
                                    pattern_name(dec.pattern));
    auto triples = chevalley_triples(dec);
    auto get = [&](std::array<int, 3> t) {
        std::sort(t.begin(), t.end());
        auto it = triples.find(t);
        return it == triples.end() ? Rat(0) : it->second;
    };
    return StructureConstants{dec.dims, get({0, 1, 2}), get({1, 1, 3}), get({1, 2, 4}), get({0, 3, 4})};
}

}  // namespace flagein
