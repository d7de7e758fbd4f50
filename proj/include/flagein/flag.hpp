#pragma once

#include <array>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "flagein/rootsystem.hpp"

namespace flagein {

struct PaintedDiagram {
    std::shared_ptr<const RootSystem> rs;
    std::vector<int> painted;  // 0-based simple-root indices, strictly increasing

    PaintedDiagram(std::shared_ptr<const RootSystem> r, std::vector<int> p);
    int b2() const { return static_cast<int>(painted.size()); }
};

struct TRoot {
    std::vector<int> coeffs;  // coordinates on the painted simple roots, ascending index
    bool operator==(const TRoot& o) const { return coeffs == o.coeffs; }
    bool operator<(const TRoot& o) const { return coeffs < o.coeffs; }
};

enum class SummandPattern { TypeA5, TypeB5, Other };
std::string pattern_name(SummandPattern p);

struct TRootDecomposition {
    PaintedDiagram pd;
    SummandPattern pattern = SummandPattern::Other;
    std::vector<TRoot> troots;               // canonical summand order
    std::vector<int> dims;                   // dims[i] = 2 |members[i]|
    std::vector<std::vector<Root>> members;  // positive complementary roots per summand

    // For five-summand Type A/B: positions within pd.painted of the painted
    // roots playing the first resp. second coordinate of the pattern.
    int first = -1, second = -1;

    int summands() const { return static_cast<int>(troots.size()); }
    int dim_m() const;
    // t-root of a summand expressed in (first, second) coordinates
    std::pair<int, int> pattern_coords(int summand) const;
    std::string dump_json() const;
};

// kappa(alpha): the painted coordinates of alpha (zero vector if alpha lies
// in the subsystem spanned by the unpainted roots).
std::vector<int> kappa(const PaintedDiagram& pd, const Root& alpha);

TRootDecomposition t_root_decomposition(const PaintedDiagram& pd);

int summand_count(const PaintedDiagram& pd);

// rank + 2 |Delta_0^+|
int dim_k(const PaintedDiagram& pd);

struct EnumeratedSpace {
    PaintedDiagram pd;
    char tag;  // 'A' (marks {1,2}), 'B' (marks {2,2}), 'O' otherwise
};

// All nonempty painted subsets of the given type with exactly q positive
// t-roots, ordered by subset (lexicographic on index sets).
std::vector<EnumeratedSpace> enumerate_spaces(LieType t, int q);

struct BracketTable {
    std::set<std::array<int, 3>> triples;  // sorted 0-based summand triples
    bool admissible(int i, int j, int k) const;
};

// Admissible bracket triples of a five-summand Type A decomposition; for
// these spaces the result is exactly {123}, {224}, {235}, {145} (1-based).
BracketTable bracket_table(const TRootDecomposition& dec);

struct WeylCertificate {
    bool valid = false;
    std::vector<Root> word;  // reflection roots, applied right to left
    std::string failure;     // first offending root when invalid
    std::vector<std::string> checks;
};

// Certificate that the Type A and Type B painted diagrams of the same group
// define isometric flag manifolds: applies the reflection word and records
// the summand-set identities.
WeylCertificate weyl_isometry_certificate(const PaintedDiagram& pdA, const PaintedDiagram& pdB);

}  // namespace flagein
