#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flagein/curvature.hpp"
#include "flagein/groebner.hpp"
#include "flagein/interval.hpp"
#include "flagein/multipoly.hpp"

namespace flagein {

struct SpaceSpec {
    enum class Family { SOm, E6A, E7A };
    Family family = Family::SOm;
    int m = 0, p = 0;  // SO(m)/U(1)xU(p)xSO(m-2p-2)

    static SpaceSpec so(int m, int p) { return {Family::SOm, m, p}; }
    static SpaceSpec e6a() { return {Family::E6A}; }
    static SpaceSpec e7a() { return {Family::E7A}; }
    // "E6A", "E7A", "so:m,p"
    static SpaceSpec parse(const std::string& text);

    std::string key() const;   // E6A | E7A | so:m,p
    std::string name() const;  // human-readable quotient
    // empty string when admissible, otherwise the violated constraint
    std::string admissibility_error() const;
};

struct SpaceData {
    SpaceSpec spec;
    TRootDecomposition dec;
    StructureConstants sc;
    std::vector<KEMetric> kes;
};

SpaceData build_space(const SpaceSpec& spec);

struct BranchSystem {
    std::string branch;  // "x5_eq_x1" or "x5_neq_x1"
    RingPtr ring;        // (x2,x3,x4) resp. (x2,x5,x3,x4); lex precedence as listed
    std::vector<MultiPoly> gens;
    int target;  // ring index of the elimination variable (x4)
};

// Normalized Einstein systems: the factored r1 - r5 gives the two branches.
std::pair<BranchSystem, BranchSystem> einstein_system(const SpaceData& sd);

struct Candidate {
    std::string branch;
    int root_index = -1;  // index of the eliminant root (provenance for dedup)
    bool exact = false;
    std::vector<Rat> x;        // exact coordinates (x1..x5) when exact
    std::vector<RInterval> ix; // interval coordinates (x1..x5), always set
};

struct SolveReport {
    std::vector<Candidate> candidates;  // all-positive, residual-certified
    std::vector<std::string> diagnostics;
    bool unresolved = false;
    UniPoly pass1_eliminant;                 // eliminant of the saturated ideal
    std::optional<UniPoly> pass2_eliminant;  // after saturating out rational roots
};

SolveReport solve_branch(const SpaceData& sd, const BranchSystem& bs, const Rat& eps);

struct SolutionClass {
    std::string branch;
    bool kahler = false;
    bool exact = false;
    std::vector<Rat> x;           // unscaled representative (x1 = 1)
    std::vector<Rat> scaled_x;    // lambda = 1 coordinates (exact case)
    std::vector<RInterval> ix;    // unscaled intervals
    std::vector<RInterval> scaled_ix;  // lambda = 1 intervals
    Rat residual_bound;           // certified max_i |r_i - lambda| / lambda
    int multiplicity = 1;         // candidates merged into this class
};

struct EinsteinSolutionSet {
    SpaceSpec spec;
    std::vector<int> dims;
    StructureConstants sc;
    std::vector<SolutionClass> classes;
    std::vector<std::string> diagnostics;
    bool complete = true;
    int count_type_a() const;  // non-Kaehler classes with x1 = x5
    int count_type_b() const;  // non-Kaehler classes with x1 != x5
    int count_kahler() const;
};

EinsteinSolutionSet classify_and_dedup(const SpaceData& sd, const std::vector<Candidate>& branch_a,
                                       const std::vector<Candidate>& branch_b,
                                       const std::vector<std::string>& diagnostics, bool unresolved,
                                       const Rat& dedup_tol = parse_rat("1e-8"));

// Full pipeline: systems, both branches, classification.
EinsteinSolutionSet solve_space(const SpaceSpec& spec, const Rat& eps = pow2(-80));

struct CertCheck {
    std::string what;
    Rat point;          // evaluation point (0 for coefficient checks)
    int expected_sign;  // +1 or -1
    int sign;           // computed exact sign
    bool ok = false;
};

struct ExistenceCertificate {
    int m = 0, p = 0;
    std::vector<CertCheck> checks;
    int conclusion = 0;  // certified minimum number of positive roots
    bool valid = false;
    UniPoly h1;  // branch-A eliminant in x3 (lex y > x2 > x4 > x3)
};

ExistenceCertificate existence_certificate(int m, int p);

struct Table4Row {
    char series;  // 'B' or 'D'
    int l, p;
    int type_a = 0, type_b = 0, kahler = 0;
    bool complete = false;
};

// The 16 (series, l, p) rows of the small-parameter count table.
std::vector<Table4Row> table4_rows();
// Solves every row; 0 threads means hardware concurrency.
std::vector<Table4Row> table4(int threads = 0, const Rat& eps = pow2(-80));

std::string solution_set_json(const EinsteinSolutionSet& s);
std::string certificate_json(const ExistenceCertificate& c);
// structural validation of solve output against the documented schema
bool validate_solution_json(const std::string& text, std::string* error = nullptr);

}  // namespace flagein
