#include "flagein/einstein.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace flagein {

SpaceSpec SpaceSpec::parse(const std::string& text) {
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](char c) { return std::tolower(c); });
    if (t == "e6a") return e6a();
    if (t == "e7a") return e7a();
    if (t.rfind("so:", 0) == 0) {
        auto comma = t.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("space: expected so:m,p");
        int m = std::stoi(t.substr(3, comma - 3));
        int p = std::stoi(t.substr(comma + 1));
        return so(m, p);
    }
    throw std::invalid_argument("space: unknown '" + text + "' (expected E6A, E7A or so:m,p)");
}

std::string SpaceSpec::key() const {
    switch (family) {
        case Family::E6A: return "E6A";
        case Family::E7A: return "E7A";
        default: return "so:" + std::to_string(m) + "," + std::to_string(p);
    }
}

std::string SpaceSpec::name() const {
    switch (family) {
        case Family::E6A: return "E6/SU(4)xSU(2)xU(1)^2";
        case Family::E7A: return "E7/SU(6)xU(1)^2";
        default: {
            int fiber = m - 2 * (p + 1);
            std::string tail = fiber > 1 ? "xSO(" + std::to_string(fiber) + ")" : "";
            return "SO(" + std::to_string(m) + ")/U(1)xU(" + std::to_string(p) + ")" + tail;
        }
    }
}

std::string SpaceSpec::admissibility_error() const {
    if (family != Family::SOm) return "";
    if (m < 7) return "so:m,p requires m >= 7";
    if (p < 2) return "so:m,p requires p >= 2";
    if (m % 2 == 1) {
        if (2 * p > m - 3) return "odd m requires p <= (m-3)/2";
    } else {
        if (2 * p > m - 6) return "even m requires p <= (m-6)/2";
    }
    return "";
}

SpaceData build_space(const SpaceSpec& spec) {
    std::string err = spec.admissibility_error();
    if (!err.empty()) throw std::invalid_argument("build_space: " + err);
    std::shared_ptr<const RootSystem> rs;
    std::vector<int> painted;
    switch (spec.family) {
        case SpaceSpec::Family::E6A:
            rs = std::make_shared<const RootSystem>(LieType('E', 6));
            painted = {0, 3};
            break;
        case SpaceSpec::Family::E7A:
            rs = std::make_shared<const RootSystem>(LieType('E', 7));
            painted = {0, 6};
            break;
        default:
            if (spec.m % 2 == 1) rs = std::make_shared<const RootSystem>(LieType('B', (spec.m - 1) / 2));
            else rs = std::make_shared<const RootSystem>(LieType('D', spec.m / 2));
            painted = {0, spec.p};
            break;
    }
    PaintedDiagram pd(rs, painted);
    TRootDecomposition dec = t_root_decomposition(pd);
    if (dec.pattern != SummandPattern::TypeA5)
        throw std::logic_error("build_space: decomposition is not five-summand Type A");
    StructureConstants sc = structure_constants(dec);
    std::vector<KEMetric> kes = all_ke_metrics(dec);
    return SpaceData{spec, std::move(dec), std::move(sc), std::move(kes)};
}

namespace {

// Ricci component as a Laurent polynomial over (x1..x5)
MultiPoly laurent_ricci(const BracketSystem& bs, const RingPtr& ring, int k) {
    int q = static_cast<int>(bs.dims.size());
    std::vector<Term> terms;
    {
        Monomial m;
        m.e[k] = -1;
        terms.push_back({m, make_rat(1, 2)});
    }
    for (int j = 0; j < q; ++j) {
        for (int i = 0; i < q; ++i) {
            Rat ckji = bs.value(k, j, i);
            if (ckji != 0) {
                Monomial m;
                m.e[k] += 1;
                m.e[j] -= 1;
                m.e[i] -= 1;
                terms.push_back({m, ckji / Rat(4 * bs.dims[k])});
            }
            Rat cjki = bs.value(j, k, i);
            if (cjki != 0) {
                Monomial m;
                m.e[j] += 1;
                m.e[k] -= 1;
                m.e[i] -= 1;
                terms.push_back({m, -cjki / Rat(2 * bs.dims[k])});
            }
        }
    }
    MultiPoly p(ring);
    p.set_terms(std::move(terms));
    return p;
}

MultiPoly canonical_gen(MultiPoly p) {
    return p.clear_denominators().strip_monomial_content().primitive_int();
}

}  // namespace

std::pair<BranchSystem, BranchSystem> einstein_system(const SpaceData& sd) {
    RingPtr ring5 = make_ring({"x1", "x2", "x3", "x4", "x5"});
    BracketSystem bs = bracket_system(sd.sc);
    std::vector<MultiPoly> r;
    for (int k = 0; k < 5; ++k) r.push_back(laurent_ricci(bs, ring5, k));

    MultiPoly d15 = r[0] - r[4];
    MultiPoly d25 = r[1] - r[4];
    MultiPoly d23 = r[1] - r[2];
    MultiPoly d34 = r[2] - r[3];
    MultiPoly d45 = r[3] - r[4];

    MultiPoly p15 = canonical_gen(d15);
    MultiPoly q_factor = p15.divide_by_var_difference(0, 4).strip_monomial_content().primitive_int();

    RingPtr ring_a = make_ring({"x2", "x3", "x4"});
    BranchSystem a{"x5_eq_x1", ring_a, {}, 2};
    for (const MultiPoly* d : {&d25, &d23, &d34}) {
        MultiPoly g = d->clear_denominators().substitute(0, Rat(1)).substitute(4, Rat(1));
        a.gens.push_back(g.transport(ring_a).strip_monomial_content().primitive_int());
    }

    RingPtr ring_b = make_ring({"x2", "x5", "x3", "x4"});
    BranchSystem b{"x5_neq_x1", ring_b, {}, 3};
    b.gens.push_back(q_factor.substitute(0, Rat(1)).transport(ring_b).strip_monomial_content().primitive_int());
    for (const MultiPoly* d : {&d23, &d34, &d45}) {
        MultiPoly g = d->clear_denominators().substitute(0, Rat(1));
        b.gens.push_back(g.transport(ring_b).strip_monomial_content().primitive_int());
    }
    return {std::move(a), std::move(b)};
}

namespace {

struct SubResult {
    std::vector<std::vector<Rat>> exact;        // assignments in ring-variable order
    std::vector<std::vector<RInterval>> boxes;  // ditto, intervals with definite signs
    bool unresolved = false;
    std::vector<std::string> notes;
};

RingPtr drop_last_var(const RingPtr& ring) {
    std::vector<std::string> vars(ring->vars.begin(), ring->vars.end() - 1);
    return make_ring(std::move(vars));
}

RingPtr with_y(const RingPtr& ring) {
    std::vector<std::string> vars = {"y"};
    vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
    return make_ring(std::move(vars));
}

// Exact solver for a zero-dimensional system on the torus (all coordinates
// nonzero): saturate, eliminate to the last variable, split rational roots
// off exactly, and back-substitute isolated irrational roots through the
// shape-position members of the second basis.
SubResult solve_zero_dim(const RingPtr& vars, const std::vector<MultiPoly>& gens_in, const Rat& eps,
                         UniPoly* e1_out, UniPoly* e2_out) {
    SubResult res;
    int n = vars->nvars();
    std::vector<MultiPoly> gens;
    for (const auto& g : gens_in)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) {
        res.unresolved = true;
        res.notes.push_back("system vanished after substitution (positive-dimensional fiber)");
        return res;
    }

    RingPtr ry = with_y(vars);
    std::vector<MultiPoly> gens_y;
    for (const auto& g : gens) gens_y.push_back(g.transport(ry));
    auto saturation = [&](const std::vector<Rat>& exclude_roots) {
        MultiPoly s = MultiPoly::variable(ry, 0);
        for (int v = 1; v <= n; ++v) s = s * MultiPoly::variable(ry, v);
        int last = n;  // ring index of the last variable
        for (const Rat& r : exclude_roots) {
            MultiPoly lin = MultiPoly::variable(ry, last) * Rat(r.get_den()) -
                            MultiPoly::constant(ry, Rat(r.get_num()));
            s = s * lin;
        }
        return s - MultiPoly::constant(ry, Rat(1));
    };

    std::vector<MultiPoly> first = gens_y;
    first.push_back(saturation({}));
    GroebnerBasis gb = buchberger(first);
    if (gb.polys.size() == 1 && gb.polys[0].leading().m.is_one()) return res;  // empty variety

    int last = n;  // in ry
    UniPoly e1;
    try {
        e1 = eliminate(gb, last);
    } catch (const EliminationError& e) {
        res.unresolved = true;
        res.notes.push_back(e.what());
        return res;
    }
    if (e1_out) *e1_out = e1;
    UniPoly e1sf = squarefree(e1);
    std::vector<Rat> rr = rational_roots(e1sf);

    for (const Rat& rho : rr) {
        if (n == 1) {
            res.exact.push_back({rho});
            continue;
        }
        RingPtr sub_ring = drop_last_var(vars);
        std::vector<MultiPoly> sub;
        bool all_zero = true;
        for (const auto& g : gens) {
            MultiPoly s = g.substitute(n - 1, rho);
            if (!s.is_zero()) all_zero = false;
            sub.push_back(s.transport(sub_ring));
        }
        if (all_zero) {
            res.unresolved = true;
            res.notes.push_back("fiber over rational root " + rat_string(rho) + " is positive-dimensional");
            continue;
        }
        SubResult rec = solve_zero_dim(sub_ring, sub, eps, nullptr, nullptr);
        res.unresolved |= rec.unresolved;
        for (auto& note : rec.notes) res.notes.push_back(note);
        for (auto& a : rec.exact) {
            a.push_back(rho);
            res.exact.push_back(a);
        }
        for (auto& b : rec.boxes) {
            b.push_back(RInterval(rho));
            res.boxes.push_back(b);
        }
    }

    // irrational roots of the eliminant
    std::vector<IsolatingInterval> isolated = sturm_isolate(e1sf);
    auto contains_rational = [&](const IsolatingInterval& iv) {
        for (const Rat& rho : rr)
            if (iv.lo < rho && rho < iv.hi) return true;
        return false;
    };
    int irrational = 0;
    for (const auto& iv : isolated)
        if (!contains_rational(iv)) ++irrational;
    if (irrational == 0) return res;

    GroebnerBasis gb2 = gb;
    UniPoly e2 = e1;
    if (!rr.empty()) {
        std::vector<MultiPoly> second = gens_y;
        second.push_back(saturation(rr));
        gb2 = buchberger(second);
        if (gb2.polys.size() == 1 && gb2.polys[0].leading().m.is_one()) return res;
        try {
            e2 = eliminate(gb2, last);
        } catch (const EliminationError& e) {
            res.unresolved = true;
            res.notes.push_back(e.what());
            return res;
        }
    }
    if (e2_out) *e2_out = e2;
    UniPoly e2sf = squarefree(e2);

    // shape-position members: B_v * v + W_v(last) for every middle variable
    std::vector<Rat> head(n + 1, Rat(0));       // leading coefficient per ring index
    std::vector<UniPoly> tail(n + 1, UniPoly());  // -W_v as a polynomial in last
    for (int v = 1; v < n; ++v) {
        const MultiPoly* member = nullptr;
        for (const auto& pbasis : gb2.polys) {
            const Monomial& lm = pbasis.leading().m;
            if (lm.e[v] != 1) continue;
            bool pure = true;
            for (int i = 0; i < kMaxVars && pure; ++i)
                if (i != v && lm.e[i] != 0) pure = false;
            if (!pure) continue;
            bool supported = true;
            for (const auto& t : pbasis.terms())
                for (int i = 0; i < kMaxVars && supported; ++i)
                    if (i != v && i != last && t.m.e[i] != 0) supported = false;
            if (supported) {
                member = &pbasis;
                break;
            }
        }
        if (!member) {
            res.unresolved = true;
            res.notes.push_back("no linear basis member for " + ry->vars[v] +
                                " (branch not in shape position)");
            return res;
        }
        std::vector<Rat> w(member->degree_in(last) + 1, Rat(0));
        for (const auto& t : member->terms()) {
            if (t.m.e[v] == 1) head[v] = t.c;
            else w[t.m.e[last]] -= t.c;
        }
        tail[v] = UniPoly(std::move(w));
    }

    for (const auto& iv0 : isolated) {
        if (contains_rational(iv0)) continue;
        IsolatingInterval iv = refine(e2sf.eval(iv0.lo) != 0 && e2sf.eval(iv0.hi) != 0 &&
                                              sgn(e2sf.eval(iv0.lo)) != sgn(e2sf.eval(iv0.hi))
                                          ? e2sf
                                          : e1sf,
                                      iv0, eps);
        // the isolating interval came from e1sf; re-anchor on e2sf when possible
        Rat cur_eps = eps;
        std::vector<RInterval> box(n);
        bool ok = false;
        for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
            RInterval xlast(iv.lo, iv.hi);
            ok = !xlast.contains_zero();
            if (ok) {
                box[n - 1] = xlast;
                for (int v = 1; v < n && ok; ++v) {
                    RInterval w = tail[v].eval(xlast);
                    RInterval coord = w / RInterval(head[v]);
                    if (coord.contains_zero()) ok = false;
                    else box[v - 1] = coord.shrinkwrap();
                }
            }
            if (!ok) {
                cur_eps /= 16;
                iv = refine(e2sf, iv, cur_eps);
            }
        }
        if (!ok) {
            res.unresolved = true;
            res.notes.push_back("could not separate a coordinate from zero near x=" +
                                rat_string(iv.lo));
            continue;
        }
        res.boxes.push_back(box);
    }

    std::sort(res.boxes.begin(), res.boxes.end(),
              [&](const auto& a, const auto& b) { return a[n - 1].lo < b[n - 1].lo; });
    std::sort(res.exact.begin(), res.exact.end());
    return res;
}

std::vector<Rat> expand_exact(const BranchSystem& bsys, const std::vector<Rat>& a) {
    if (bsys.branch == "x5_eq_x1") return {Rat(1), a[0], a[1], a[2], Rat(1)};
    return {Rat(1), a[0], a[2], a[3], a[1]};
}

std::vector<RInterval> expand_box(const BranchSystem& bsys, const std::vector<RInterval>& a) {
    RInterval one{Rat(1)};
    if (bsys.branch == "x5_eq_x1") return {one, a[0], a[1], a[2], one};
    return {one, a[0], a[2], a[3], a[1]};
}

}  // namespace

SolveReport solve_branch(const SpaceData& sd, const BranchSystem& bsys, const Rat& eps) {
    SolveReport rep;
    UniPoly e1;
    UniPoly e2;
    bool have_e2 = false;
    UniPoly* e2ptr = &e2;
    SubResult res = solve_zero_dim(bsys.ring, bsys.gens, eps, &e1, e2ptr);
    have_e2 = !e2.is_zero();
    rep.pass1_eliminant = e1;
    if (have_e2) rep.pass2_eliminant = e2;
    rep.unresolved = res.unresolved;
    rep.diagnostics = res.notes;

    const Rat residual_tol = parse_rat("1e-9");
    int index = 0;
    for (const auto& a : res.exact) {
        Candidate c;
        c.branch = bsys.branch;
        c.root_index = index++;
        c.exact = true;
        c.x = expand_exact(bsys, a);
        bool positive = std::all_of(c.x.begin(), c.x.end(), [](const Rat& v) { return sgn(v) > 0; });
        if (!positive) continue;
        std::vector<Rat> ric = ricci_components(sd.sc, c.x);
        bool einstein = std::all_of(ric.begin(), ric.end(), [&](const Rat& r) { return r == ric[0]; });
        if (!einstein) {
            rep.diagnostics.push_back("exact point failed the Einstein check (dropped)");
            continue;
        }
        if (sgn(ric[0]) <= 0) {
            rep.diagnostics.push_back("exact point has nonpositive Einstein constant (dropped)");
            continue;
        }
        for (const Rat& v : c.x) c.ix.push_back(RInterval(v));
        rep.candidates.push_back(std::move(c));
    }
    for (const auto& b : res.boxes) {
        Candidate c;
        c.branch = bsys.branch;
        c.root_index = index++;
        c.exact = false;
        c.ix = expand_box(bsys, b);
        bool positive = std::all_of(c.ix.begin(), c.ix.end(), [](const RInterval& v) { return v.positive(); });
        if (!positive) continue;
        std::vector<RInterval> ric = ricci_components(sd.sc, c.ix);
        Rat worst(0);
        for (const auto& r : ric) {
            Rat m = (r - ric[0]).mag();
            if (m > worst) worst = m;
        }
        Rat rel = worst / ric[0].lo;
        if (sgn(ric[0].lo) <= 0 || rel > residual_tol) {
            rep.diagnostics.push_back("residual certification failed for a candidate (dropped); bound " +
                                      rat_string(rel));
            continue;
        }
        rep.candidates.push_back(std::move(c));
    }
    return rep;
}

namespace {

std::vector<RInterval> involution(const std::vector<RInterval>& v) {
    return {v[4], v[1], v[2], v[3], v[0]};
}

std::vector<Rat> involution(const std::vector<Rat>& v) { return {v[4], v[1], v[2], v[3], v[0]}; }

bool proportional(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

bool close_vec(const std::vector<RInterval>& a, const std::vector<RInterval>& b, const Rat& tol) {
    for (size_t i = 0; i < a.size(); ++i) {
        Rat d = rat_abs(a[i].mid() - b[i].mid());
        if (d > tol) return false;
    }
    return true;
}

}  // namespace

int EinsteinSolutionSet::count_type_a() const {
    int n = 0;
    for (const auto& c : classes) n += (!c.kahler && c.branch == "x5_eq_x1") ? 1 : 0;
    return n;
}
int EinsteinSolutionSet::count_type_b() const {
    int n = 0;
    for (const auto& c : classes) n += (!c.kahler && c.branch == "x5_neq_x1") ? 1 : 0;
    return n;
}
int EinsteinSolutionSet::count_kahler() const {
    int n = 0;
    for (const auto& c : classes) n += c.kahler ? 1 : 0;
    return n;
}

EinsteinSolutionSet classify_and_dedup(const SpaceData& sd, const std::vector<Candidate>& branch_a,
                                       const std::vector<Candidate>& branch_b,
                                       const std::vector<std::string>& diagnostics, bool unresolved,
                                       const Rat& dedup_tol) {
    EinsteinSolutionSet out;
    out.spec = sd.spec;
    out.dims = sd.dec.dims;
    out.sc = sd.sc;
    out.diagnostics = diagnostics;
    out.complete = !unresolved;

    std::vector<Candidate> all = branch_a;
    all.insert(all.end(), branch_b.begin(), branch_b.end());
    std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
        if (a.branch != b.branch) return a.branch < b.branch;  // x5_eq_x1 first
        return a.ix[3].lo < b.ix[3].lo;                        // by x4
    });

    struct Scaled {
        SolutionClass cls;
        std::vector<RInterval> key;  // lambda=1 coordinates for matching
        std::string branch;
        int root_index;
    };
    std::vector<Scaled> reps;

    for (const Candidate& c : all) {
        SolutionClass cls;
        cls.branch = c.branch;
        cls.exact = c.exact;
        std::vector<RInterval> key;
        if (c.exact) {
            cls.x = c.x;
            std::vector<Rat> ric = ricci_components(sd.sc, c.x);
            Rat lambda = ric[0];
            for (const Rat& v : c.x) cls.scaled_x.push_back(v * lambda);
            for (const Rat& v : cls.scaled_x) key.push_back(RInterval(v));
            cls.ix = c.ix;
            cls.scaled_ix = key;
            cls.residual_bound = Rat(0);
            for (const auto& ke : sd.kes) {
                if (proportional(c.x, ke.coeffs) || proportional(involution(c.x), ke.coeffs)) {
                    cls.kahler = true;
                    break;
                }
            }
        } else {
            cls.ix = c.ix;
            std::vector<RInterval> ric = ricci_components(sd.sc, c.ix);
            RInterval lambda = ric[0];
            for (const auto& v : c.ix) cls.scaled_ix.push_back((v * lambda).shrinkwrap());
            key = cls.scaled_ix;
            Rat worst(0);
            for (const auto& r : ric) {
                Rat m = (r - ric[0]).mag();
                if (m > worst) worst = m;
            }
            cls.residual_bound = worst / ric[0].lo;
        }

        bool merged = false;
        for (auto& rep : reps) {
            bool same = close_vec(key, rep.key, dedup_tol);
            bool invol_same = close_vec(key, involution(rep.key), dedup_tol);
            if (same && rep.branch == c.branch && rep.root_index != c.root_index && !invol_same) {
                out.complete = false;
                out.diagnostics.push_back("distinct candidates collide within the dedup tolerance; "
                                          "increase precision (--eps)");
            }
            if (same || invol_same) {
                rep.cls.multiplicity += 1;
                merged = true;
                break;
            }
        }
        if (!merged) reps.push_back({std::move(cls), std::move(key), c.branch, c.root_index});
    }

    for (auto& rep : reps) out.classes.push_back(std::move(rep.cls));
    std::sort(out.classes.begin(), out.classes.end(), [](const SolutionClass& a, const SolutionClass& b) {
        if (a.kahler != b.kahler) return a.kahler;  // Kaehler classes first
        if (a.branch != b.branch) return a.branch < b.branch;
        return a.ix[3].lo < b.ix[3].lo;
    });
    return out;
}

EinsteinSolutionSet solve_space(const SpaceSpec& spec, const Rat& eps) {
    SpaceData sd = build_space(spec);
    auto [ba, bb] = einstein_system(sd);
    SolveReport ra = solve_branch(sd, ba, eps);
    SolveReport rb = solve_branch(sd, bb, eps);
    std::vector<std::string> diagnostics = ra.diagnostics;
    diagnostics.insert(diagnostics.end(), rb.diagnostics.begin(), rb.diagnostics.end());
    return classify_and_dedup(sd, ra.candidates, rb.candidates, diagnostics,
                              ra.unresolved || rb.unresolved);
}

namespace {

Rat so_l(int m) { return Rat(m % 2 == 1 ? (m - 1) / 2 : m / 2); }

}  // namespace

ExistenceCertificate existence_certificate(int m, int p) {
    SpaceSpec spec = SpaceSpec::so(m, p);
    std::string err = spec.admissibility_error();
    if (!err.empty()) throw std::invalid_argument("existence_certificate: " + err);

    SpaceData sd = build_space(spec);
    auto [ba, bb] = einstein_system(sd);

    // lex order y > x2 > x4 > x3, eliminate to x3
    RingPtr cert_ring = make_ring({"y", "x2", "x4", "x3"});
    std::vector<MultiPoly> gens;
    for (const auto& g : ba.gens) gens.push_back(g.transport(cert_ring));
    MultiPoly sat = MultiPoly::variable(cert_ring, 0);
    for (int v = 1; v <= 3; ++v) sat = sat * MultiPoly::variable(cert_ring, v);
    gens.push_back(sat - MultiPoly::constant(cert_ring, Rat(1)));
    GroebnerBasis gb = buchberger(gens);

    ExistenceCertificate cert;
    cert.m = m;
    cert.p = p;
    cert.h1 = eliminate(gb, 3);

    auto check = [&](const std::string& what, const Rat& point, int expected, const Rat& value) {
        CertCheck cc{what, point, expected, sgn(value), false};
        cc.ok = cc.sign == expected;
        cert.checks.push_back(cc);
        return cc.ok;
    };

    bool ok = check("leading coefficient of h1 positive", Rat(0), 1, cert.h1.lc());
    ok = check("h1(0) > 0", Rat(0), 1, cert.h1.eval(Rat(0))) && ok;

    // the paper's per-range test point with h1 < 0
    Rat mm(m), pp(p);
    Rat point;
    std::string which;
    if (m % 2 == 1 && 2 * p == m - 3) {
        Rat l = so_l(m);
        point = Rat(1) / l - Rat(1) / (4 * l * l);
        which = "odd-m boundary p = l-1";
    } else if (4 * p <= m) {
        point = make_rat(1, 2) + Rat(13) / (16 * mm) - (5 * pp) / (16 * mm);
        which = "case 1 (p <= m/4)";
    } else if (3 * p <= m) {
        if (4 * p >= m + 8) {
            point = make_rat(19, 50);
            which = "case 2 (m/4 < p <= m/3)";
        } else {
            point = make_rat(21, 50);
            which = "case 2 boundary (p = m/4+1)";
        }
    } else if (8 * p <= 3 * m) {
        point = make_rat(1, 3);
        which = "case 3 (m/3 < p <= 3m/8)";
    } else {
        Rat q = mm / 2 - pp;
        point = 4 * q / mm - 4 / mm - 8 * (q / mm) * (q / mm) + 16 * q / (mm * mm);
        which = "case 4 (3m/8 < p, q = m/2 - p)";
    }
    ok = check("test point positive [" + which + "]", point, 1, point) && ok;
    ok = check("h1 < 0 at the test point [" + which + "]", point, -1, cert.h1.eval(point)) && ok;
    cert.conclusion = ok ? 2 : 0;

    if (p == 2 && m >= 13) {
        Rat b = (20 * mm / 33 - make_rat(493, 198)) / 2;
        bool ordered = point < Rat(1) && Rat(1) < b;
        bool ok4 = ok && ordered;
        if (!ordered) {
            CertCheck cc{"p=2 points ordered 0 < a < 1 < b", b, 1, -1, false};
            cert.checks.push_back(cc);
        }
        ok4 = check("h1(1) > 0", Rat(1), 1, cert.h1.eval(Rat(1))) && ok4;
        ok4 = check("h1 < 0 at the p=2 sharpening point", b, -1, cert.h1.eval(b)) && ok4;
        if (ok4) cert.conclusion = 4;
        ok = ok4;
    }
    cert.valid = ok;
    return cert;
}

std::vector<Table4Row> table4_rows() {
    std::vector<Table4Row> rows;
    const std::pair<int, int> b_rows[] = {{3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3},
                                          {5, 4}, {6, 2}, {6, 3}, {6, 4}, {6, 5}};
    const std::pair<int, int> d_rows[] = {{5, 2}, {6, 2}, {6, 3}, {7, 2}, {7, 3}, {7, 4}};
    for (auto [l, p] : b_rows) rows.push_back({'B', l, p});
    for (auto [l, p] : d_rows) rows.push_back({'D', l, p});
    return rows;
}

std::vector<Table4Row> table4(int threads, const Rat& eps) {
    std::vector<Table4Row> rows = table4_rows();
    int t = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    t = std::min<int>(t, static_cast<int>(rows.size()));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= rows.size()) break;
            Table4Row& row = rows[i];
            int m = row.series == 'B' ? 2 * row.l + 1 : 2 * row.l;
            try {
                EinsteinSolutionSet s = solve_space(SpaceSpec::so(m, row.p), eps);
                row.type_a = s.count_type_a();
                row.type_b = s.count_type_b();
                row.kahler = s.count_kahler();
                row.complete = s.complete;
            } catch (const std::exception&) {
                row.complete = false;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return rows;
}

namespace {

nlohmann::json interval_json(const RInterval& v) {
    return nlohmann::json{{"lo", rat_string(v.lo)}, {"hi", rat_string(v.hi)}};
}

}  // namespace

std::string solution_set_json(const EinsteinSolutionSet& s) {
    nlohmann::json j;
    j["space"] = {{"family", s.spec.family == SpaceSpec::Family::SOm
                                 ? "SO"
                                 : (s.spec.family == SpaceSpec::Family::E6A ? "E6A" : "E7A")},
                  {"key", s.spec.key()},
                  {"name", s.spec.name()}};
    if (s.spec.family == SpaceSpec::Family::SOm) {
        j["space"]["m"] = s.spec.m;
        j["space"]["p"] = s.spec.p;
    }
    j["dims"] = s.dims;
    j["structure_constants"] = {{"c312", rat_string(s.sc.c312)},
                                {"c422", rat_string(s.sc.c422)},
                                {"c523", rat_string(s.sc.c523)},
                                {"c514", rat_string(s.sc.c514)}};
    j["solutions"] = nlohmann::json::array();
    for (const auto& c : s.classes) {
        nlohmann::json sol;
        sol["branch"] = c.branch;
        sol["kind"] = c.kahler ? "kahler" : "non_kahler";
        sol["lambda_normalized"] = true;
        sol["residual_bound"] = rat_string(c.residual_bound);
        sol["coeffs"] = nlohmann::json::array();
        if (c.exact)
            for (const Rat& v : c.scaled_x) sol["coeffs"].push_back(rat_string(v));
        else
            for (const RInterval& v : c.scaled_ix) sol["coeffs"].push_back(interval_json(v));
        j["solutions"].push_back(sol);
    }
    j["certificates"] = nlohmann::json::array();
    j["complete"] = s.complete;
    j["diagnostics"] = s.diagnostics;
    return j.dump(2);
}

std::string certificate_json(const ExistenceCertificate& c) {
    nlohmann::json j;
    j["m"] = c.m;
    j["p"] = c.p;
    j["valid"] = c.valid;
    j["conclusion"] = c.conclusion;
    j["checks"] = nlohmann::json::array();
    for (const auto& ch : c.checks) {
        j["checks"].push_back({{"what", ch.what},
                               {"point", rat_string(ch.point)},
                               {"expected_sign", ch.expected_sign},
                               {"sign", ch.sign},
                               {"ok", ch.ok}});
    }
    j["h1_degree"] = c.h1.degree();
    return j.dump(2);
}

bool validate_solution_json(const std::string& text, std::string* error) {
    auto fail = [&](const std::string& why) {
        if (error) *error = why;
        return false;
    };
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) return fail("not valid JSON");
    for (const char* k : {"space", "dims", "structure_constants", "solutions", "certificates", "complete"})
        if (!j.contains(k)) return fail(std::string("missing key '") + k + "'");
    if (!j["space"].contains("family") || !j["space"].contains("key")) return fail("space incomplete");
    if (!j["dims"].is_array() || j["dims"].size() != 5) return fail("dims must have 5 entries");
    for (const char* k : {"c312", "c422", "c523", "c514"})
        if (!j["structure_constants"].contains(k)) return fail("structure_constants incomplete");
    if (!j["solutions"].is_array()) return fail("solutions must be an array");
    for (const auto& sol : j["solutions"]) {
        for (const char* k : {"branch", "kind", "coeffs", "lambda_normalized", "residual_bound"})
            if (!sol.contains(k)) return fail("solution entry incomplete");
        std::string kind = sol["kind"];
        if (kind != "kahler" && kind != "non_kahler") return fail("bad kind");
        std::string branch = sol["branch"];
        if (branch != "x5_eq_x1" && branch != "x5_neq_x1") return fail("bad branch");
        if (!sol["coeffs"].is_array() || sol["coeffs"].size() != 5) return fail("coeffs must have 5 entries");
        for (const auto& c : sol["coeffs"]) {
            if (c.is_string()) {
                try {
                    parse_rat(c.get<std::string>());
                } catch (const std::exception&) {
                    return fail("bad rational coefficient");
                }
            } else if (c.is_object()) {
                if (!c.contains("lo") || !c.contains("hi")) return fail("interval needs lo/hi");
            } else {
                return fail("coefficient must be a string or interval object");
            }
        }
    }
    return true;
}

}  // namespace flagein
