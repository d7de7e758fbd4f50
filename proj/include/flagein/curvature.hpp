#pragma once

#include <array>
#include <map>
#include <vector>

#include "flagein/flag.hpp"
#include "flagein/interval.hpp"
#include "flagein/kahler.hpp"
#include "flagein/rational.hpp"

namespace flagein {

// The four structure constants of a five-summand Type A space, in the
// paper-fixed summand order, together with the summand dimensions.
struct StructureConstants {
    std::vector<int> dims;  // d1..d5
    Rat c312, c422, c523, c514;
};

// Nonzero [k|ij] values keyed by sorted summand triple, plus dimensions.
// This is the only input the Ricci formula needs.
struct BracketSystem {
    std::vector<int> dims;
    std::map<std::array<int, 3>, Rat> coeffs;

    Rat value(int i, int j, int k) const {
        std::array<int, 3> t{i, j, k};
        std::sort(t.begin(), t.end());
        auto it = coeffs.find(t);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
};

BracketSystem bracket_system(const StructureConstants& sc);

// (c523, c422) from the fibration over G/L with fiber the first summand.
std::pair<Rat, Rat> submersion_constants(const TRootDecomposition& dec);

// (c312, c514) from r2 - r3 = 0 and r4 - r5 = 0 at the Kaehler-Einstein
// coefficients.
std::pair<Rat, Rat> ke_normalized_constants(const TRootDecomposition& dec, const Rat& c523,
                                            const Rat& c422, const KEMetric& ke);

// Both steps with the default-ordering KE metric.
StructureConstants structure_constants(const TRootDecomposition& dec);

// Ricci components of the diagonal metric x, exact.
std::vector<Rat> ricci_components(const BracketSystem& bs, const std::vector<Rat>& x);
std::vector<Rat> ricci_components(const StructureConstants& sc, const std::vector<Rat>& x);

// Interval version with outward rounding at the given precision.
std::vector<RInterval> ricci_components(const BracketSystem& bs, const std::vector<RInterval>& x,
                                        unsigned bits = 256);
std::vector<RInterval> ricci_components(const StructureConstants& sc, const std::vector<RInterval>& x,
                                        unsigned bits = 256);

// Brute-force [k|ij] from the Weyl-basis definition (sum of squared bracket
// coefficients over B-orthonormal bases). Desk scale: rank <= 5.
std::map<std::array<int, 3>, Rat> chevalley_triples(const TRootDecomposition& dec);

// Type A five-summand wrapper around chevalley_triples.
StructureConstants chevalley_oracle(const PaintedDiagram& pd);

}  // namespace flagein
