#pragma once

#include <stdexcept>
#include <vector>

#include "flagein/multipoly.hpp"
#include "flagein/unipoly.hpp"

namespace flagein {

struct GroebnerBasis {
    RingPtr ring;
    std::vector<MultiPoly> polys;  // reduced basis, sorted by leading monomial ascending
};

// Full normal form of f modulo the basis (every term reduced).
MultiPoly normal_form(MultiPoly f, const std::vector<MultiPoly>& basis);

// Reduced Groebner basis under the ring's lex order. Deterministic:
// normal S-pair selection (lex-smallest lcm, ties by generator index),
// integer-primitive scaling after each reduction.
GroebnerBasis buchberger(std::vector<MultiPoly> gens);

struct EliminationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The univariate member of the basis in `var` (integer-primitive, positive
// leading coefficient). Throws EliminationError if the elimination ideal
// has no univariate generator in the basis.
UniPoly eliminate(const GroebnerBasis& gb, int var);

}  // namespace flagein
