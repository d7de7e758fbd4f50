#pragma once

#include <vector>

#include "flagein/flag.hpp"
#include "flagein/rational.hpp"

namespace flagein {

// An invariant ordering for b2 = r painted roots: a sign vector on the
// simple t-roots. A t-root takes the sign of its last nonzero coordinate
// (later painted coordinates dominate).
using Ordering = std::vector<int>;

int troot_sign(const Ordering& s, const std::vector<int>& troot);

struct DeltaWeights {
    std::vector<int> two_delta;  // 2*delta_m in simple-root coordinates
    std::vector<Rat> k_values;   // 2 (2delta, a_i) / (a_i, a_i) per painted root
};

// Half-sum of the complementary roots declared positive by the ordering,
// doubled (2 delta_m), plus its pairing values on the painted roots.
DeltaWeights delta_m(const PaintedDiagram& pd, const Ordering& ordering);

struct KEMetric {
    TRootDecomposition dec;
    Ordering ordering;
    std::vector<Rat> coeffs;  // per summand, canonical order, all > 0
};

// Kaehler-Einstein coefficients: |(2delta_sigma, alpha)| on a representative
// root of each summand (the normalized inner product). Throws if any
// coefficient degenerates to zero.
KEMetric ke_coefficients(const TRootDecomposition& dec, const Ordering& ordering);

// All orderings with the global sign fixed (s_1 = +1), deduplicated by
// coefficient vector.
std::vector<KEMetric> all_ke_metrics(const TRootDecomposition& dec);

}  // namespace flagein
