#include "cva/hilbert.hpp"

#include <algorithm>
#include <bit>

namespace cva {

namespace {

std::vector<Monomial> minimal_monomial_gens(const IdealSpec& M) {
    for (const auto& g : M.generators)
        if (g.num_terms() != 1)
            throw std::invalid_argument("hilbert: non-monomial generator in " + M.label);
    std::vector<Monomial> gens;
    gens.reserve(M.generators.size());
    for (const auto& g : M.generators) gens.push_back(g.leading_term().mono);
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (j == i) continue;
            if (gens[j] == gens[i] ? j < i : gens[j].divides(gens[i])) redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

Bidegree graded_degree(const Monomial& m, const Grading& g) {
    Bidegree d;
    for (int v = 0; v < m.num_vars(); ++v) {
        int e = m.exponent(v);
        if (!e) continue;
        d.a += g[v].a * e;
        d.b += g[v].b * e;
    }
    return d;
}

// ---- dimension ----

int min_hitting_set(std::vector<uint64_t> supports, int bound) {
    if (supports.empty()) return 0;
    if (bound <= 0) return 1 << 20; // cut off
    // Branch on the variables of a smallest uncovered support.
    size_t pick = 0;
    for (size_t i = 1; i < supports.size(); ++i)
        if (std::popcount(supports[i]) < std::popcount(supports[pick])) pick = i;
    uint64_t s = supports[pick];
    int best = 1 << 20;
    while (s) {
        uint64_t bit = s & (~s + 1);
        s ^= bit;
        std::vector<uint64_t> rest;
        rest.reserve(supports.size());
        for (uint64_t t : supports)
            if (!(t & bit)) rest.push_back(t);
        best = std::min(best, 1 + min_hitting_set(std::move(rest), std::min(bound, best) - 1));
    }
    return best;
}

} // namespace

int monomial_dimension(const IdealSpec& M, int num_vars) {
    if (!M.is_proper())
        throw std::invalid_argument("monomial_dimension: improper ideal " + M.label);
    auto gens = minimal_monomial_gens(M);
    if (gens.empty()) return num_vars;

    uint64_t universe = 0;
    for (const auto& m : gens) universe |= m.support_mask();
    std::vector<int> uvars;
    for (int v = 0; v < 64; ++v)
        if (universe & (uint64_t{1} << v)) uvars.push_back(v);
    const int u = static_cast<int>(uvars.size());
    const int outside = num_vars - u;

    std::vector<uint64_t> supports; // remapped to the universe variables
    supports.reserve(gens.size());
    for (const auto& m : gens) {
        uint64_t s = 0;
        for (int k = 0; k < u; ++k)
            if (m.exponent(uvars[k])) s |= (uint64_t{1} << k);
        supports.push_back(s);
    }

    if (u <= 20) {
        int best = 0;
        for (uint64_t mask = 0; mask < (uint64_t{1} << u); ++mask) {
            bool ok = true;
            for (uint64_t s : supports)
                if ((s & ~mask) == 0) { ok = false; break; }
            if (ok) best = std::max(best, std::popcount(mask));
        }
        return outside + best;
    }
    return num_vars - min_hitting_set(supports, u + 1);
}

namespace {

// ---- K-polynomial: inclusion-exclusion route ----

void kpoly_ie_rec(const Ring& ring, const std::vector<Monomial>& gens, size_t idx,
                  const Monomial& lcm, int sign,
                  std::map<std::pair<int, int>, long long>& out, const Grading& grading) {
    if (idx == gens.size()) {
        Bidegree d = graded_degree(lcm, grading);
        out[{d.a, d.b}] += sign;
        return;
    }
    // If the next generator divides the running lcm, the include/exclude
    // branches cancel exactly.
    if (gens[idx].divides(lcm)) return;
    kpoly_ie_rec(ring, gens, idx + 1, lcm, sign, out, grading);
    kpoly_ie_rec(ring, gens, idx + 1, lcm.lcm(ring, gens[idx]), -sign, out, grading);
}

KPolynomial kpoly_inclusion_exclusion(const Ring& ring, std::vector<Monomial> gens,
                                      const Grading& grading) {
    // Large lcms saturate sooner when big generators come first.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return cmp_lex(a, b) > 0;
    });
    KPolynomial K;
    kpoly_ie_rec(ring, gens, 0, Monomial::one(ring), 1, K.terms, grading);
    std::erase_if(K.terms, [](const auto& kv) { return kv.second == 0; });
    return K;
}

// ---- K-polynomial: pivot-variable recursion ----

void minimalize(std::vector<Monomial>& gens) {
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (j == i) continue;
            if (gens[j] == gens[i] ? j < i : gens[j].divides(gens[i])) redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    gens = std::move(out);
}

void kpoly_accumulate(std::map<std::pair<int, int>, long long>& acc,
                      const std::map<std::pair<int, int>, long long>& other, int shift_a,
                      int shift_b, long long scale) {
    for (const auto& [k, c] : other) acc[{k.first + shift_a, k.second + shift_b}] += c * scale;
}

KPolynomial kpoly_pivot(const Ring& ring, std::vector<Monomial> gens, const Grading& grading) {
    minimalize(gens);
    KPolynomial K;
    if (gens.empty()) {
        K.terms[{0, 0}] = 1;
        return K;
    }
    for (const auto& g : gens)
        if (g.is_one()) return K; // unit ideal: K = 0

    // Disjoint supports: complete intersection, product formula.
    bool disjoint = true;
    uint64_t seen = 0;
    for (const auto& g : gens) {
        if (seen & g.support_mask()) { disjoint = false; break; }
        seen |= g.support_mask();
    }
    if (disjoint) {
        K.terms[{0, 0}] = 1;
        for (const auto& g : gens) {
            Bidegree d = graded_degree(g, grading);
            std::map<std::pair<int, int>, long long> next;
            kpoly_accumulate(next, K.terms, 0, 0, 1);
            kpoly_accumulate(next, K.terms, d.a, d.b, -1);
            K.terms = std::move(next);
        }
        std::erase_if(K.terms, [](const auto& kv) { return kv.second == 0; });
        return K;
    }

    // Pivot on the most shared variable: K(M) = K(M + (v)) + t_v K(M : v).
    std::vector<int> freq(ring.num_vars(), 0);
    for (const auto& g : gens)
        for (int v = 0; v < ring.num_vars(); ++v)
            if (g.exponent(v)) ++freq[v];
    int pivot = 0;
    for (int v = 1; v < ring.num_vars(); ++v)
        if (freq[v] > freq[pivot]) pivot = v;

    std::vector<Monomial> plus{Monomial::var(ring, pivot)};
    for (const auto& g : gens)
        if (!g.exponent(pivot)) plus.push_back(g);

    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        if (!g.exponent(pivot)) {
            colon.push_back(g);
        } else {
            auto e = g.exponents_vec();
            --e[static_cast<size_t>(pivot)];
            colon.push_back(Monomial(ring, e));
        }
    }

    KPolynomial a = kpoly_pivot(ring, std::move(plus), grading);
    KPolynomial b = kpoly_pivot(ring, std::move(colon), grading);
    Bidegree dv = graded_degree(Monomial::var(ring, pivot), grading);
    kpoly_accumulate(K.terms, a.terms, 0, 0, 1);
    kpoly_accumulate(K.terms, b.terms, dv.a, dv.b, 1);
    std::erase_if(K.terms, [](const auto& kv) { return kv.second == 0; });
    return K;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

KPolynomial k_polynomial(const IdealSpec& M, const Grading& grading) {
    if (static_cast<size_t>(M.ring->num_vars()) != grading.size())
        throw std::invalid_argument("k_polynomial: grading size mismatch");
    auto gens = minimal_monomial_gens(M);
    KPolynomial kp = kpoly_pivot(*M.ring, gens, grading);
    if (gens.size() <= 24) {
        KPolynomial ki = kpoly_inclusion_exclusion(*M.ring, gens, grading);
        if (!(ki == kp))
            throw std::logic_error("k_polynomial: inclusion-exclusion and pivot routes disagree");
    }
    return kp;
}

std::string KPolynomial::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms) {
        if (!out.empty()) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        long long m = c >= 0 ? c : -c;
        std::string mono;
        if (k.first) mono += "a" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second) mono += std::string("b") + (k.second > 1 ? "^" + std::to_string(k.second) : "");
        if (mono.empty()) out += std::to_string(m);
        else out += (m == 1 ? "" : std::to_string(m)) + mono;
    }
    return out;
}

Grading total_grading(int num_vars) {
    return Grading(static_cast<size_t>(num_vars), Bidegree{1, 0});
}

long long BidegreePolynomial::coeff(int a, int b) const {
    auto it = terms.find({a, b});
    return it == terms.end() ? 0 : it->second;
}

long long BidegreePolynomial::at_ones() const {
    long long s = 0;
    for (const auto& [k, c] : terms) s += c;
    return s;
}

BidegreePolynomial BidegreePolynomial::mul(const BidegreePolynomial& o) const {
    BidegreePolynomial r;
    r.degree = degree + o.degree;
    for (const auto& [k1, c1] : terms)
        for (const auto& [k2, c2] : o.terms)
            r.terms[{k1.first + k2.first, k1.second + k2.second}] += c1 * c2;
    std::erase_if(r.terms, [](const auto& kv) { return kv.second == 0; });
    return r;
}

BidegreePolynomial BidegreePolynomial::times_ab_power(int k) const {
    BidegreePolynomial r;
    r.degree = degree + 2 * k;
    for (const auto& [key, c] : terms) r.terms[{key.first + k, key.second + k}] = c;
    return r;
}

BidegreePolynomial BidegreePolynomial::swapped() const {
    BidegreePolynomial r;
    r.degree = degree;
    for (const auto& [key, c] : terms) r.terms[{key.second, key.first}] = c;
    return r;
}

std::string BidegreePolynomial::str() const {
    if (terms.empty()) return "0";
    // Descending A-exponent.
    std::vector<std::pair<std::pair<int, int>, long long>> v(terms.begin(), terms.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        return x.first.first != y.first.first ? x.first.first > y.first.first
                                              : x.first.second < y.first.second;
    });
    std::string out;
    for (const auto& [k, c] : v) {
        if (!out.empty()) out += " + ";
        std::string mono;
        if (k.first) mono += k.first > 1 ? "A^" + std::to_string(k.first) : "A";
        if (k.second) mono += k.second > 1 ? "B^" + std::to_string(k.second) : "B";
        if (mono.empty()) out += std::to_string(c);
        else out += (c == 1 ? "" : std::to_string(c)) + mono;
    }
    return out;
}

BidegreePolynomial binomial_power(int m) {
    BidegreePolynomial r;
    r.degree = m;
    for (int i = 0; i <= m; ++i) r.terms[{m - i, i}] = binom(m, i);
    return r;
}

BidegreePolynomial multidegree(const IdealSpec& M, const Grading& grading) {
    const int num_vars = M.ring->num_vars();
    KPolynomial K = k_polynomial(M, grading);
    int codim = num_vars - monomial_dimension(M, num_vars);

    // Substitute a -> 1-alpha, b -> 1-beta and expand.
    std::map<std::pair<int, int>, long long> full;
    for (const auto& [k, c] : K.terms) {
        for (int u = 0; u <= k.first; ++u)
            for (int v = 0; v <= k.second; ++v) {
                long long coef = c * binom(k.first, u) * binom(k.second, v);
                if ((u + v) % 2) coef = -coef;
                full[{u, v}] += coef;
            }
    }
    std::erase_if(full, [](const auto& kv) { return kv.second == 0; });

    if (full.empty())
        throw std::logic_error("multidegree: zero K-polynomial for " + M.label);
    int lowest = 1 << 20;
    for (const auto& [k, c] : full) lowest = std::min(lowest, k.first + k.second);

    BidegreePolynomial md;
    md.degree = lowest;
    for (const auto& [k, c] : full)
        if (k.first + k.second == lowest) md.terms[k] = c;

    if (md.degree != codim)
        throw std::logic_error("multidegree: lowest component degree " +
                               std::to_string(md.degree) + " != codimension " +
                               std::to_string(codim) + " for " + M.label);
    for (const auto& [k, c] : md.terms)
        if (c < 0) throw std::logic_error("multidegree: negative coefficient for " + M.label);
    return md;
}

long long degree(const GroebnerBasis& gb) {
    IdealSpec in = initial_ideal(gb);
    BidegreePolynomial md = multidegree(in, total_grading(gb.source.ring->num_vars()));
    long long c = 0;
    for (const auto& [k, v] : md.terms) c += v;
    return c;
}

long long degree(const IdealSpec& I, const TermOrder& order, const Deadline& deadline) {
    I.require_bihomogeneous();
    return degree(buchberger(I, order, deadline));
}

BidegreePolynomial bidegree(const GroebnerBasis& gb) {
    IdealSpec in = initial_ideal(gb);
    return multidegree(in, gb.source.ring->bidegrees());
}

BidegreePolynomial bidegree(const IdealSpec& I, const TermOrder& order, const Deadline& deadline) {
    I.require_bihomogeneous();
    return bidegree(buchberger(I, order, deadline));
}

BidegreeTable hilbert_function_bruteforce(const IdealSpec& M, const Grading& grading,
                                          int up_to_degree) {
    const int nv = M.ring->num_vars();
    if (nv > 10 || up_to_degree > 8)
        throw std::invalid_argument("hilbert_function_bruteforce: instance too large");
    auto gens = minimal_monomial_gens(M);

    BidegreeTable table;
    std::vector<uint8_t> exps(nv, 0);
    auto standard = [&](const Monomial& m) {
        for (const auto& g : gens)
            if (g.divides(m)) return false;
        return true;
    };
    // Enumerate all exponent vectors of total degree <= up_to_degree.
    std::function<void(int, int)> rec = [&](int v, int remaining) {
        if (v == nv) {
            Monomial m(*M.ring, exps);
            if (standard(m)) {
                Bidegree d = graded_degree(m, grading);
                ++table[{d.a, d.b}];
            }
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[v] = static_cast<uint8_t>(e);
            rec(v + 1, remaining - e);
        }
        exps[v] = 0;
    };
    rec(0, up_to_degree);
    return table;
}

BidegreeTable series_counts(const KPolynomial& K, const Grading& grading, int up_to_degree) {
    int p = 0, q = 0;
    for (const auto& d : grading) {
        if (d.a == 1 && d.b == 0) ++p;
        else if (d.a == 0 && d.b == 1) ++q;
        else throw std::invalid_argument("series_counts: grading must be (1,0)/(0,1)");
    }
    auto count_free = [](int vars, int deg) -> long long {
        if (deg < 0) return 0;
        if (vars == 0) return deg == 0 ? 1 : 0;
        return binom(vars - 1 + deg, deg);
    };
    BidegreeTable out;
    for (int i = 0; i <= up_to_degree; ++i) {
        for (int j = 0; i + j <= up_to_degree; ++j) {
            long long c = 0;
            for (const auto& [k, kc] : K.terms)
                c += kc * count_free(p, i - k.first) * count_free(q, j - k.second);
            if (c) out[{i, j}] = c;
        }
    }
    return out;
}

} // namespace cva
