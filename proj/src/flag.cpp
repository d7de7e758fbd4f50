#include "flagein/flag.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace flagein {

PaintedDiagram::PaintedDiagram(std::shared_ptr<const RootSystem> r, std::vector<int> p)
    : rs(std::move(r)), painted(std::move(p)) {
    if (painted.empty()) throw std::invalid_argument("PaintedDiagram: painted set is empty");
    std::sort(painted.begin(), painted.end());
    painted.erase(std::unique(painted.begin(), painted.end()), painted.end());
    for (int i : painted)
        if (i < 0 || i >= rs->rank()) throw std::invalid_argument("PaintedDiagram: index out of range");
}

std::string pattern_name(SummandPattern p) {
    switch (p) {
        case SummandPattern::TypeA5: return "five-summand Type A";
        case SummandPattern::TypeB5: return "five-summand Type B";
        default: return "other";
    }
}

std::vector<int> kappa(const PaintedDiagram& pd, const Root& alpha) {
    std::vector<int> k(pd.painted.size());
    for (size_t i = 0; i < pd.painted.size(); ++i) k[i] = alpha[pd.painted[i]];
    return k;
}

int TRootDecomposition::dim_m() const { return std::accumulate(dims.begin(), dims.end(), 0); }

std::pair<int, int> TRootDecomposition::pattern_coords(int summand) const {
    if (first < 0) throw std::logic_error("pattern_coords: not a five-summand A/B pattern");
    return {troots[summand].coeffs[first], troots[summand].coeffs[second]};
}

namespace {

// grouped positive t-roots of a painted diagram, keyed by kappa coordinates
std::map<std::vector<int>, std::vector<Root>> group_by_troot(const PaintedDiagram& pd) {
    std::map<std::vector<int>, std::vector<Root>> groups;
    for (const Root& a : pd.rs->positive_roots()) {
        std::vector<int> k = kappa(pd, a);
        if (std::all_of(k.begin(), k.end(), [](int c) { return c == 0; })) continue;
        groups[k].push_back(a);
    }
    return groups;
}

// matches the grouped t-roots against a five-element pattern given in
// (first, second) coordinates; returns {first, second} positions or nullopt
bool match_pattern(const std::map<std::vector<int>, std::vector<Root>>& groups,
                   const std::vector<std::pair<int, int>>& pattern, int& first, int& second) {
    if (groups.size() != pattern.size()) return false;
    int b2 = static_cast<int>(groups.begin()->first.size());
    if (b2 != 2) return false;
    for (int f = 0; f < 2; ++f) {
        int s = 1 - f;
        bool ok = true;
        for (const auto& [fs, ss] : pattern) {
            std::vector<int> key(2);
            key[f] = fs;
            key[s] = ss;
            if (!groups.count(key)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            first = f;
            second = s;
            return true;
        }
    }
    return false;
}

const std::vector<std::pair<int, int>> kTypeA5 = {{1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}};
const std::vector<std::pair<int, int>> kTypeB5 = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}};

}  // namespace

TRootDecomposition t_root_decomposition(const PaintedDiagram& pd) {
    TRootDecomposition dec{pd};
    auto groups = group_by_troot(pd);

    std::vector<std::pair<int, int>> order_pattern;
    int first = -1, second = -1;
    if (match_pattern(groups, kTypeA5, first, second)) {
        dec.pattern = SummandPattern::TypeA5;
        order_pattern = kTypeA5;
    } else if (match_pattern(groups, kTypeB5, first, second)) {
        dec.pattern = SummandPattern::TypeB5;
        order_pattern = kTypeB5;
    }

    if (dec.pattern != SummandPattern::Other) {
        dec.first = first;
        dec.second = second;
        for (const auto& [fs, ss] : order_pattern) {
            std::vector<int> key(2);
            key[first] = fs;
            key[second] = ss;
            dec.troots.push_back({key});
            dec.members.push_back(groups.at(key));
            dec.dims.push_back(2 * static_cast<int>(groups.at(key).size()));
        }
        return dec;
    }

    // generic order: by level, then lexicographically descending
    std::vector<std::vector<int>> keys;
    for (const auto& [k, v] : groups) keys.push_back(k);
    auto level = [](const std::vector<int>& k) { return std::accumulate(k.begin(), k.end(), 0); };
    std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
        if (level(a) != level(b)) return level(a) < level(b);
        return a > b;
    });
    for (const auto& k : keys) {
        dec.troots.push_back({k});
        dec.members.push_back(groups.at(k));
        dec.dims.push_back(2 * static_cast<int>(groups.at(k).size()));
    }
    return dec;
}

int summand_count(const PaintedDiagram& pd) { return static_cast<int>(group_by_troot(pd).size()); }

int dim_k(const PaintedDiagram& pd) {
    int zero_count = 0;
    for (const Root& a : pd.rs->positive_roots()) {
        std::vector<int> k = kappa(pd, a);
        if (std::all_of(k.begin(), k.end(), [](int c) { return c == 0; })) ++zero_count;
    }
    return pd.rs->rank() + 2 * zero_count;
}

std::vector<EnumeratedSpace> enumerate_spaces(LieType t, int q) {
    if (q < 1) throw std::invalid_argument("enumerate_spaces: q must be >= 1");
    auto rs = std::make_shared<const RootSystem>(t);
    std::vector<int> marks = rs->dynkin_marks();
    std::vector<EnumeratedSpace> out;
    int n = rs->rank();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> painted;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) painted.push_back(i);
        PaintedDiagram pd(rs, painted);
        if (summand_count(pd) != q) continue;
        char tag = 'O';
        if (painted.size() == 2) {
            int m0 = marks[painted[0]], m1 = marks[painted[1]];
            if ((m0 == 1 && m1 == 2) || (m0 == 2 && m1 == 1)) tag = 'A';
            else if (m0 == 2 && m1 == 2) tag = 'B';
        }
        out.push_back({pd, tag});
    }
    std::sort(out.begin(), out.end(),
              [](const EnumeratedSpace& a, const EnumeratedSpace& b) { return a.pd.painted < b.pd.painted; });
    return out;
}

bool BracketTable::admissible(int i, int j, int k) const {
    std::array<int, 3> t{i, j, k};
    std::sort(t.begin(), t.end());
    return triples.count(t) > 0;
}

BracketTable bracket_table(const TRootDecomposition& dec) {
    if (dec.pattern != SummandPattern::TypeA5)
        throw std::invalid_argument("bracket_table: expected five-summand Type A, got " +
                                    pattern_name(dec.pattern));
    BracketTable bt;
    int q = dec.summands();
    auto vec = [&](int s) { return dec.troots[s].coeffs; };
    auto add = [&](const std::vector<int>& a, const std::vector<int>& b, int sign) {
        std::vector<int> r(a.size());
        for (size_t t = 0; t < a.size(); ++t) r[t] = a[t] + sign * b[t];
        return r;
    };
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j)
            for (int k = 0; k < q; ++k) {
                std::vector<int> xk = vec(k);
                if (xk == add(vec(i), vec(j), +1) || xk == add(vec(i), vec(j), -1) ||
                    xk == add(vec(j), vec(i), -1)) {
                    std::array<int, 3> t{i, j, k};
                    std::sort(t.begin(), t.end());
                    bt.triples.insert(t);
                }
            }
    return bt;
}

namespace {

// reflection roots of the longest element of the A_p subdiagram given by the
// ordered chain of simple-root indices
std::vector<Root> nested_reflection_roots(const RootSystem& rs, const std::vector<int>& chain) {
    int p = static_cast<int>(chain.size());
    std::vector<Root> word;
    auto segment = [&](int a, int b) {  // 1-based inclusive positions in the chain
        Root r(rs.rank(), 0);
        for (int t = a; t <= b; ++t) r[chain[t - 1]] = 1;
        return r;
    };
    if (p % 2 == 1) {
        int k = (p - 1) / 2;
        for (int j = 0; j <= k; ++j) word.push_back(segment(k + 1 - j, k + 1 + j));
    } else {
        int k = p / 2;
        for (int j = 1; j <= k; ++j) word.push_back(segment(k + 1 - j, k + j));
    }
    return word;
}

std::string root_str(const Root& r) {
    std::string s = "(";
    for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

}  // namespace

WeylCertificate weyl_isometry_certificate(const PaintedDiagram& pdA, const PaintedDiagram& pdB) {
    const RootSystem& rs = *pdA.rs;
    if (pdA.rs->type().str() != pdB.rs->type().str())
        throw std::invalid_argument("weyl_isometry_certificate: different Lie types");

    TRootDecomposition decA = t_root_decomposition(pdA);
    TRootDecomposition decB = t_root_decomposition(pdB);
    if (decA.pattern != SummandPattern::TypeA5)
        throw std::invalid_argument("weyl_isometry_certificate: first diagram is not five-summand Type A");
    if (decB.pattern != SummandPattern::TypeB5)
        throw std::invalid_argument("weyl_isometry_certificate: second diagram is not five-summand Type B");

    // the A_p chain shared by the two paintings
    std::vector<int> chain;
    char series = rs.type().series;
    if (series == 'B' || series == 'D') {
        int p = pdA.painted[1];
        if (pdA.painted != std::vector<int>{0, p} || pdB.painted != std::vector<int>{p - 1, p})
            throw std::invalid_argument("weyl_isometry_certificate: unsupported painted pair for " +
                                        rs.type().str());
        for (int i = 0; i < p; ++i) chain.push_back(i);
    } else if (series == 'E' && rs.rank() == 6) {
        if (pdA.painted != std::vector<int>{0, 3} || pdB.painted != std::vector<int>{3, 5})
            throw std::invalid_argument("weyl_isometry_certificate: expected E6 {a1,a4} vs {a4,a6}");
        chain = {0, 1, 2, 5};
    } else if (series == 'E' && rs.rank() == 7) {
        if (pdA.painted != std::vector<int>{0, 6} || pdB.painted != std::vector<int>{5, 6})
            throw std::invalid_argument("weyl_isometry_certificate: expected E7 {a1,a7} vs {a6,a7}");
        chain = {0, 1, 2, 3, 4, 5};
    } else {
        throw std::invalid_argument("weyl_isometry_certificate: unsupported type " + rs.type().str());
    }

    WeylCertificate cert;
    cert.word = nested_reflection_roots(rs, chain);
    for (const Root& beta : cert.word)
        if (!rs.is_root(beta)) throw std::logic_error("weyl_isometry_certificate: word entry is not a root");

    auto apply = [&](Root v) {
        for (auto it = cert.word.rbegin(); it != cert.word.rend(); ++it) v = rs.reflect(*it, v);
        return v;
    };

    auto fail = [&](const Root& r, const std::string& what) {
        cert.valid = false;
        cert.failure = "identity '" + what + "' fails at root " + root_str(r);
    };

    // kappa of a root in (first, second) pattern coordinates of a decomposition
    auto coords = [](const TRootDecomposition& dec, const Root& a) {
        std::vector<int> k = kappa(dec.pd, a);
        return std::pair<int, int>{k[dec.first], k[dec.second]};
    };

    cert.valid = true;
    // w0(Delta_0(A)) = Delta_0(B)
    for (const Root& a : rs.positive_roots()) {
        std::vector<int> kA = kappa(pdA, a);
        if (!std::all_of(kA.begin(), kA.end(), [](int c) { return c == 0; })) continue;
        Root img = apply(a);
        std::vector<int> kB = kappa(pdB, img);
        if (!std::all_of(kB.begin(), kB.end(), [](int c) { return c == 0; })) {
            fail(a, "w0(D0(A)) = D0(B)");
            return cert;
        }
    }
    cert.checks.push_back("w0(D0(A)) = D0(B)");

    // summand identities: (1,0) -> -(1,0), (0,1) -> (1,1), (1,1) -> (0,1),
    // (0,2) -> (2,2), (1,2) -> (1,2)
    struct Identity {
        std::pair<int, int> from, to;
        int sign;
        const char* name;
    };
    const Identity ids[] = {
        {{1, 0}, {1, 0}, -1, "w0(Dn(1,0)) = -Dm(1,0)"},
        {{0, 1}, {1, 1}, +1, "w0(Dn(0,1)) = Dm(1,1)"},
        {{1, 1}, {0, 1}, +1, "w0(Dn(1,1)) = Dm(0,1)"},
        {{0, 2}, {2, 2}, +1, "w0(Dn(0,2)) = Dm(2,2)"},
        {{1, 2}, {1, 2}, +1, "w0(Dn(1,2)) = Dm(1,2)"},
    };
    for (const auto& id : ids) {
        for (const Root& a : rs.positive_roots()) {
            std::vector<int> kA = kappa(pdA, a);
            if (std::all_of(kA.begin(), kA.end(), [](int c) { return c == 0; })) continue;
            if (coords(decA, a) != id.from) continue;
            Root img = apply(a);
            int s = root_sign(img);
            if (s != id.sign) {
                fail(a, id.name);
                return cert;
            }
            Root pos = img;
            if (s < 0)
                for (auto& c : pos) c = -c;
            if (coords(decB, pos) != id.to) {
                fail(a, id.name);
                return cert;
            }
        }
        cert.checks.push_back(id.name);
    }
    return cert;
}

std::string TRootDecomposition::dump_json() const {
    nlohmann::json j;
    j["type"] = pd.rs->type().str();
    j["rank"] = pd.rs->rank();
    j["painted"] = nlohmann::json::array();
    for (int i : pd.painted) j["painted"].push_back(i + 1);  // 1-based in output
    j["pattern"] = pattern_name(pattern);
    j["troots"] = nlohmann::json::array();
    for (const auto& t : troots) j["troots"].push_back(t.coeffs);
    j["dims"] = dims;
    return j.dump(2);
}

}  // namespace flagein
