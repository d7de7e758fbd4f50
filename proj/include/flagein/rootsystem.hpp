#pragma once

#include <set>
#include <string>
#include <vector>

#include "flagein/rational.hpp"

namespace flagein {

// A root is its integer coefficient vector over the simple roots. A valid
// root has all coefficients >= 0 (positive) or all <= 0 (negative).
using Root = std::vector<int>;

// +1 for a positive root, -1 for a negative root, throws on mixed signs.
int root_sign(const Root& r);

struct LieType {
    char series;  // 'A','B','C','D','E','F','G'
    int rank;

    LieType(char s, int r);
    static LieType parse(const std::string& text);  // "B6", "E7", "G2", ...
    std::string str() const { return std::string(1, series) + std::to_string(rank); }
};

class RootSystem {
  public:
    explicit RootSystem(LieType t);

    const LieType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<std::vector<Rat>>& gram() const { return gram_; }
    int dual_coxeter() const { return dual_coxeter_; }

    // Inner product normalized so long roots have (a, a) = 2; arguments are
    // integer weight vectors in the simple-root basis.
    Rat inner(const Root& a, const Root& b) const;
    Rat norm2(const Root& a) const { return inner(a, a); }
    // B = -Killing form pairing: normalized product / (2 h^vee).
    Rat inner_killing_dual(const Root& a, const Root& b) const;

    bool is_root(const Root& v) const;
    bool is_positive_root(const Root& v) const;

    const Root& highest_root() const { return highest_; }
    std::vector<int> dynkin_marks() const { return highest_; }

    // Reflection s_beta applied to an integer vector.
    Root reflect(const Root& beta, const Root& v) const;

    // alpha-chain through beta: largest p, q with beta - p*alpha and
    // beta + q*alpha both roots.
    std::pair<int, int> chain(const Root& alpha, const Root& beta) const;

    // dim g = rank + 2 |positive roots|
    int dim_g() const { return rank() + 2 * static_cast<int>(positive_.size()); }

    static size_t expected_positive_count(LieType t);

    std::string dump_json() const;

  private:
    void build();
    LieType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Rat> len2_;  // squared length of each simple root
    std::vector<std::vector<Rat>> gram_;
    std::vector<Root> positive_;
    std::set<Root> positive_set_;
    Root highest_;
    int dual_coxeter_ = 0;
};

}  // namespace flagein
