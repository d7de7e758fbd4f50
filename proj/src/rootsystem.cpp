#include "flagein/rootsystem.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace flagein {

int root_sign(const Root& r) {
    bool pos = false, neg = false;
    for (int c : r) {
        if (c > 0) pos = true;
        if (c < 0) neg = true;
    }
    if (pos && neg) throw std::invalid_argument("root_sign: mixed-sign coefficient vector");
    if (!pos && !neg) throw std::invalid_argument("root_sign: zero vector");
    return pos ? 1 : -1;
}

LieType::LieType(char s, int r) : series(s), rank(r) {
    switch (s) {
        case 'A':
            if (r < 1) throw std::invalid_argument("LieType: A requires rank >= 1");
            break;
        case 'B':
            if (r < 2) throw std::invalid_argument("LieType: B requires rank >= 2 (B1 = A1)");
            break;
        case 'C':
            if (r < 3) throw std::invalid_argument("LieType: C requires rank >= 3 (C2 = B2)");
            break;
        case 'D':
            if (r < 4) throw std::invalid_argument("LieType: D requires rank >= 4 (D3 = A3)");
            break;
        case 'E':
            if (r < 6 || r > 8) throw std::invalid_argument("LieType: E rank must be 6, 7 or 8");
            break;
        case 'F':
            if (r != 4) throw std::invalid_argument("LieType: F rank must be 4");
            break;
        case 'G':
            if (r != 2) throw std::invalid_argument("LieType: G rank must be 2");
            break;
        default:
            throw std::invalid_argument("LieType: unknown series");
    }
}

LieType LieType::parse(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("LieType::parse: '" + text + "'");
    char s = static_cast<char>(std::toupper(text[0]));
    int r = std::stoi(text.substr(1));
    return LieType(s, r);
}

size_t RootSystem::expected_positive_count(LieType t) {
    size_t l = static_cast<size_t>(t.rank);
    switch (t.series) {
        case 'A': return l * (l + 1) / 2;
        case 'B':
        case 'C': return l * l;
        case 'D': return l * (l - 1);
        case 'E': return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
        case 'F': return 24;
        case 'G': return 6;
    }
    throw std::logic_error("expected_positive_count");
}

namespace {

// adjacency-driven Cartan matrix: edges with multiplicities per series
std::vector<std::vector<int>> cartan_matrix(const LieType& t, std::vector<Rat>& len2) {
    int n = t.rank;
    std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) C[i][i] = 2;
    len2.assign(n, Rat(2));
    auto bond = [&](int i, int j) {  // simple edge
        C[i][j] = -1;
        C[j][i] = -1;
    };
    switch (t.series) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            C[n - 2][n - 1] = -2;  // alpha_{l-1} long, alpha_l short
            len2[n - 1] = 1;
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            C[n - 1][n - 2] = -2;  // alpha_l long, the rest short
            for (int i = 0; i + 1 < n; ++i) len2[i] = 1;
            break;
        case 'D':
            for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case 'E':
            // chain alpha_1 .. alpha_{n-1}, with alpha_n attached to the chain:
            // E6 at alpha_3, E7 at alpha_4, E8 at alpha_5
            for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
            bond(t.rank == 6 ? 2 : (t.rank == 7 ? 3 : 4), n - 1);
            break;
        case 'F':
            bond(0, 1);
            bond(2, 3);
            C[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            C[2][1] = -1;
            len2[2] = len2[3] = 1;
            break;
        case 'G':
            C[0][1] = -1;  // alpha_1 short, alpha_2 long
            C[1][0] = -3;
            len2[0] = make_rat(2, 3);
            break;
    }
    return C;
}

int dual_coxeter_number(const LieType& t) {
    switch (t.series) {
        case 'A': return t.rank + 1;
        case 'B': return 2 * t.rank - 1;
        case 'C': return t.rank + 1;
        case 'D': return 2 * t.rank - 2;
        case 'E': return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
        case 'F': return 9;
        case 'G': return 4;
    }
    throw std::logic_error("dual_coxeter_number");
}

}  // namespace

RootSystem::RootSystem(LieType t) : type_(t) { build(); }

void RootSystem::build() {
    int n = rank();
    cartan_ = cartan_matrix(type_, len2_);
    gram_.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram_[i][j] = Rat(cartan_[i][j]) * len2_[j] / 2;
    dual_coxeter_ = dual_coxeter_number(type_);

    // closure from the simple roots: gamma + alpha_i is a root iff the
    // alpha_i-chain through gamma descends further than <gamma, alpha_i^vee>
    std::vector<Root> level;
    for (int i = 0; i < n; ++i) {
        Root r(n, 0);
        r[i] = 1;
        level.push_back(r);
        positive_.push_back(r);
        positive_set_.insert(r);
    }
    auto pairing = [&](const Root& g, int i) {  // <gamma, alpha_i^vee>
        long s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<long>(g[j]) * cartan_[j][i];
        return static_cast<int>(s);
    };
    while (!level.empty()) {
        std::vector<Root> next;
        for (const Root& g : level) {
            for (int i = 0; i < n; ++i) {
                Root down = g;
                int p = 0;
                while (true) {
                    down[i] -= 1;
                    bool zero = std::all_of(down.begin(), down.end(), [](int c) { return c == 0; });
                    if (zero || !positive_set_.count(down)) break;
                    ++p;
                }
                if (p - pairing(g, i) <= 0) continue;
                Root up = g;
                up[i] += 1;
                if (positive_set_.insert(up).second) {
                    positive_.push_back(up);
                    next.push_back(up);
                }
            }
        }
        level = std::move(next);
    }

    if (positive_.size() != expected_positive_count(type_))
        throw std::logic_error("RootSystem: generated " + std::to_string(positive_.size()) +
                               " positive roots for " + type_.str() + ", expected " +
                               std::to_string(expected_positive_count(type_)));

    auto height = [](const Root& r) {
        int h = 0;
        for (int c : r) h += c;
        return h;
    };
    highest_ = positive_.front();
    for (const Root& r : positive_)
        if (height(r) > height(highest_)) highest_ = r;
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
    int n = rank();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("RootSystem::inner: dimension mismatch");
    Rat s(0);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            s += Rat(a[i]) * gram_[i][j] * Rat(b[j]);
        }
    }
    return s;
}

Rat RootSystem::inner_killing_dual(const Root& a, const Root& b) const {
    return inner(a, b) / Rat(2 * dual_coxeter_);
}

bool RootSystem::is_root(const Root& v) const {
    if (positive_set_.count(v)) return true;
    Root neg(v.size());
    for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    return positive_set_.count(neg) > 0;
}

bool RootSystem::is_positive_root(const Root& v) const { return positive_set_.count(v) > 0; }

Root RootSystem::reflect(const Root& beta, const Root& v) const {
    Rat coef = Rat(2) * inner(v, beta) / norm2(beta);
    if (coef.get_den() != 1) throw std::logic_error("reflect: non-integer reflection coefficient");
    long c = coef.get_num().get_si();
    Root out = v;
    for (size_t i = 0; i < v.size(); ++i) out[i] -= static_cast<int>(c) * beta[i];
    return out;
}

std::pair<int, int> RootSystem::chain(const Root& alpha, const Root& beta) const {
    auto step = [&](int dir) {
        int k = 0;
        Root v = beta;
        while (true) {
            for (size_t i = 0; i < v.size(); ++i) v[i] += dir * alpha[i];
            bool zero = std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
            if (zero || !is_root(v)) break;
            ++k;
        }
        return k;
    };
    return {step(-1), step(+1)};
}

std::string RootSystem::dump_json() const {
    nlohmann::json j;
    j["type"] = type_.str();
    j["rank"] = rank();
    j["dual_coxeter"] = dual_coxeter_;
    j["positive_roots"] = nlohmann::json::array();
    for (const Root& r : positive_) j["positive_roots"].push_back(r);
    j["highest_root"] = highest_;
    return j.dump(2);
}

}  // namespace flagein
