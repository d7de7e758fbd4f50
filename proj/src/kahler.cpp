#include "flagein/kahler.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagein {

int troot_sign(const Ordering& s, const std::vector<int>& troot) {
    if (s.size() != troot.size()) throw std::invalid_argument("troot_sign: dimension mismatch");
    for (int i = static_cast<int>(troot.size()) - 1; i >= 0; --i) {
        if (troot[i] != 0) return troot[i] > 0 ? s[i] : -s[i];
    }
    throw std::invalid_argument("troot_sign: zero t-root");
}

DeltaWeights delta_m(const PaintedDiagram& pd, const Ordering& ordering) {
    if (static_cast<int>(ordering.size()) != pd.b2())
        throw std::invalid_argument("delta_m: ordering size must equal b2");
    for (int s : ordering)
        if (s != 1 && s != -1) throw std::invalid_argument("delta_m: ordering entries must be +-1");

    std::vector<int> two_delta(pd.rs->rank(), 0);
    for (const Root& a : pd.rs->positive_roots()) {
        std::vector<int> k = kappa(pd, a);
        if (std::all_of(k.begin(), k.end(), [](int c) { return c == 0; })) continue;
        int sign = troot_sign(ordering, k);
        for (int i = 0; i < pd.rs->rank(); ++i) two_delta[i] += sign * a[i];
    }

    DeltaWeights w;
    w.two_delta = two_delta;
    for (int idx : pd.painted) {
        Root simple(pd.rs->rank(), 0);
        simple[idx] = 1;
        Rat pairing = pd.rs->inner(two_delta, simple);
        w.k_values.push_back(Rat(2) * pairing / pd.rs->norm2(simple));
    }
    return w;
}

KEMetric ke_coefficients(const TRootDecomposition& dec, const Ordering& ordering) {
    DeltaWeights w = delta_m(dec.pd, ordering);
    KEMetric ke{dec, ordering, {}};
    for (int s = 0; s < dec.summands(); ++s) {
        const Root& rep = dec.members[s].front();
        Rat c = rat_abs(dec.pd.rs->inner(w.two_delta, rep));
        if (c == 0)
            throw std::invalid_argument("ke_coefficients: zero coefficient on summand " +
                                        std::to_string(s + 1) + " (degenerate ordering)");
        ke.coeffs.push_back(c);
    }
    return ke;
}

std::vector<KEMetric> all_ke_metrics(const TRootDecomposition& dec) {
    int r = dec.pd.b2();
    std::vector<KEMetric> out;
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
        Ordering s(r, 1);
        for (int i = 1; i < r; ++i)
            if (mask & (1u << (i - 1))) s[i] = -1;
        KEMetric ke = ke_coefficients(dec, s);
        bool dup = std::any_of(out.begin(), out.end(),
                               [&](const KEMetric& k) { return k.coeffs == ke.coeffs; });
        if (!dup) out.push_back(std::move(ke));
    }
    return out;
}

}  // namespace flagein
