#include "cva/groebner.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cva {

IdealSpec::IdealSpec(RingPtr r, std::vector<Polynomial> gens, std::string lab)
    : ring(std::move(r)), generators(std::move(gens)), label(std::move(lab)) {
    if (!ring) throw std::invalid_argument("IdealSpec: null ring");
    for (const auto& g : generators) {
        if (g.is_zero()) throw std::invalid_argument("IdealSpec: zero generator in " + label);
        if (!g.ring()->same_as(*ring)) throw std::invalid_argument("IdealSpec: ring mismatch");
    }
}

bool IdealSpec::all_bihomogeneous() const {
    for (const auto& g : generators)
        if (!g.is_bihomogeneous()) return false;
    return true;
}

void IdealSpec::require_bihomogeneous() const {
    if (!all_bihomogeneous())
        throw std::invalid_argument("IdealSpec: generators of " + label + " not bihomogeneous");
}

bool IdealSpec::is_monomial() const {
    for (const auto& g : generators)
        if (g.num_terms() != 1) return false;
    return true;
}

bool IdealSpec::is_proper() const {
    for (const auto& g : generators)
        if (!g.is_zero() && g.leading_term().mono.is_one()) return false;
    return true;
}

namespace {

void check_deadline(const Deadline& dl) {
    if (dl && std::chrono::steady_clock::now() > *dl)
        throw BudgetExceeded("groebner: wall-clock budget exceeded");
}

// Comparator kinds used by the engine. TermOrderCmp covers the public orders;
// HWeightRevlexCmp is the internal order of the homogenization fallback:
// min-weight-first with a pure reverse-lex tie-break, so the homogenizer
// (the last variable) appears in leading terms with minimal exponent.
struct TermOrderCmp {
    const TermOrder* ord;
    int operator()(const Monomial& a, const Monomial& b) const { return ord->cmp(a, b); }
};

struct HWeightRevlexCmp {
    const WeightVector* w;
    int operator()(const Monomial& a, const Monomial& b) const {
        long wa = a.weight(*w), wb = b.weight(*w);
        if (wa != wb) return wa < wb ? 1 : -1;
        const auto& ea = a.exponents();
        const auto& eb = b.exponents();
        for (int v = static_cast<int>(ea.size()) - 1; v >= 0; --v)
            if (ea[v] != eb[v]) return ea[v] < eb[v] ? 1 : -1;
        return 0;
    }
};

using Terms = std::vector<Term>;

struct BasisEl {
    Terms t; // monic, sorted descending under the engine order
    Monomial lt;
};

template <class Cmp>
class Engine {
public:
    Engine(RingPtr ring, Cmp cmp, Deadline dl)
        : ring_(std::move(ring)), cmp_(cmp), deadline_(dl) {}

    Terms sorted(const Polynomial& p) const {
        Terms t = p.terms();
        std::sort(t.begin(), t.end(),
                  [&](const Term& x, const Term& y) { return cmp_(x.mono, y.mono) > 0; });
        return t;
    }

    Polynomial to_poly(Terms t) const { return Polynomial(ring_, std::move(t)); }

    static void make_monic(Terms& t) {
        if (t.empty()) return;
        Rational lc = t.front().coeff;
        if (lc.is_one()) return;
        for (auto& tm : t) tm.coeff = tm.coeff / lc;
    }

    // a - c * m * g, all sorted descending; result sorted descending. Takes
    // ownership of a and moves its surviving terms, so a reduction step only
    // allocates for the transformed g terms.
    Terms sub_scaled(Terms&& a, const Rational& c, const Monomial& m, const Terms& g) const {
        Terms out;
        sub_scaled_into(std::move(a), c, m, g, out);
        return out;
    }

    // Same, but reusing the caller's buffer to avoid a fresh allocation per
    // reduction step.
    void sub_scaled_into(Terms&& a, const Rational& c, const Monomial& m, const Terms& g,
                         Terms& out) const {
        out.clear();
        out.reserve(a.size() + g.size());
        size_t i = 0, j = 0;
        auto gterm = [&](size_t jj) -> Term {
            return {-(c * g[jj].coeff), g[jj].mono.mul(*ring_, m)};
        };
        Term cur = j < g.size() ? gterm(j) : Term{};
        while (i < a.size() && j < g.size()) {
            int cv = cmp_(a[i].mono, cur.mono);
            if (cv > 0) {
                out.push_back(std::move(a[i++]));
            } else if (cv < 0) {
                out.push_back(std::move(cur));
                if (++j < g.size()) cur = gterm(j);
            } else {
                Rational s = a[i].coeff + cur.coeff;
                if (!s.is_zero()) out.push_back({std::move(s), std::move(a[i].mono)});
                ++i;
                if (++j < g.size()) cur = gterm(j);
            }
        }
        for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
        for (; j < g.size(); ++j) out.push_back(gterm(j));
    }

    // Full normal form: reduce the largest reducible term first, scanning the
    // basis in listed order. `skip` excludes one element (tail reduction).
    Terms normal_form(Terms p, const std::vector<BasisEl>& B, int skip = -1) const {
        size_t idx = 0;
        unsigned steps = 0;
        Terms buf;
        while (idx < p.size()) {
            int red = -1;
            const Monomial& m = p[idx].mono;
            for (size_t g = 0; g < B.size(); ++g) {
                if (static_cast<int>(g) == skip) continue;
                if (B[g].lt.divides(m)) {
                    red = static_cast<int>(g);
                    break;
                }
            }
            if (red < 0) {
                ++idx;
                continue;
            }
            Rational c = p[idx].coeff;
            Monomial q = m.div(*ring_, B[red].lt);
            sub_scaled_into(std::move(p), c, q, B[red].t, buf);
            p.swap(buf);
            if ((++steps & 0xff) == 0) check_deadline(deadline_);
        }
        return p;
    }

    // Reduce only while the leading term is divisible; tails are cleaned up
    // during the final interreduction. This is what the main Buchberger loop
    // uses; the reduced basis it converges to is the same canonical object.
    Terms top_reduce(Terms p, const std::vector<BasisEl>& B) const {
        unsigned steps = 0;
        Terms buf;
        while (!p.empty()) {
            int red = -1;
            const Monomial& m = p.front().mono;
            for (size_t g = 0; g < B.size(); ++g) {
                if (B[g].lt.divides(m)) {
                    red = static_cast<int>(g);
                    break;
                }
            }
            if (red < 0) break;
            Rational c = p.front().coeff;
            Monomial q = m.div(*ring_, B[red].lt);
            sub_scaled_into(std::move(p), c, q, B[red].t, buf);
            p.swap(buf);
            if ((++steps & 0xff) == 0) check_deadline(deadline_);
        }
        return p;
    }

    // Reduced Groebner basis of the given generators.
    std::vector<Terms> reduced_basis(std::vector<Terms> gens) {
        std::vector<BasisEl> B;
        struct Pair {
            int i, j;
            Monomial lcm;
            int deg;
        };
        std::vector<Pair> pairs;

        auto add_element = [&](Terms t) {
            make_monic(t);
            const int tidx = static_cast<int>(B.size());
            Monomial ltt = t.front().mono;

            // Chain criterion on queued pairs.
            std::erase_if(pairs, [&](const Pair& P) {
                if (!ltt.divides(P.lcm)) return false;
                if (B[P.i].lt.lcm(*ring_, ltt) == P.lcm) return false;
                if (B[P.j].lt.lcm(*ring_, ltt) == P.lcm) return false;
                return true;
            });

            struct Cand {
                int i;
                Monomial lcm;
                bool coprime;
                bool dead = false;
            };
            std::vector<Cand> cands;
            cands.reserve(B.size());
            for (int i = 0; i < tidx; ++i)
                cands.push_back({i, B[i].lt.lcm(*ring_, ltt), B[i].lt.coprime(ltt)});

            // Gebauer-Moeller M criterion.
            for (auto& x : cands) {
                for (const auto& y : cands) {
                    if (x.i == y.i) continue;
                    if (y.lcm != x.lcm && y.lcm.divides(x.lcm)) {
                        x.dead = true;
                        break;
                    }
                }
            }
            // F criterion: among equal lcms keep one, none if any is coprime.
            for (size_t x = 0; x < cands.size(); ++x) {
                if (cands[x].dead) continue;
                bool coprime_class = cands[x].coprime;
                for (size_t y = x + 1; y < cands.size(); ++y) {
                    if (cands[y].dead || cands[y].lcm != cands[x].lcm) continue;
                    coprime_class = coprime_class || cands[y].coprime;
                    cands[y].dead = true;
                }
                if (coprime_class) cands[x].dead = true; // B criterion included
            }

            for (const auto& c : cands)
                if (!c.dead) pairs.push_back({c.i, tidx, c.lcm, c.lcm.degree()});

            B.push_back({std::move(t), std::move(ltt)});
        };

        // Seed: reduce each generator against the ones already in.
        for (auto& g : gens) {
            Terms r = top_reduce(std::move(g), B);
            if (!r.empty()) add_element(std::move(r));
        }

        while (!pairs.empty()) {
            check_deadline(deadline_);
            // Normal strategy: minimal lcm degree, ties by pair indices.
            size_t best = 0;
            for (size_t k = 1; k < pairs.size(); ++k) {
                const auto& a = pairs[k];
                const auto& b = pairs[best];
                if (a.deg != b.deg ? a.deg < b.deg
                                   : (a.i != b.i ? a.i < b.i : a.j < b.j))
                    best = k;
            }
            Pair P = pairs[best];
            pairs.erase(pairs.begin() + static_cast<long>(best));

            Terms shifted;
            {
                const Monomial mi = P.lcm.div(*ring_, B[P.i].lt);
                shifted.reserve(B[P.i].t.size());
                for (const auto& tm : B[P.i].t)
                    shifted.push_back({tm.coeff, tm.mono.mul(*ring_, mi)});
            }
            Terms s = sub_scaled(std::move(shifted), Rational(1),
                                 P.lcm.div(*ring_, B[P.j].lt), B[P.j].t);
            Terms r = top_reduce(std::move(s), B);
            if (!r.empty()) add_element(std::move(r));
        }

        // Interreduction: drop leading-term-redundant elements, then tail
        // reduce; the result is the unique reduced basis.
        std::vector<int> keep;
        for (int i = 0; i < static_cast<int>(B.size()); ++i) {
            bool redundant = false;
            for (int j = 0; j < static_cast<int>(B.size()) && !redundant; ++j) {
                if (j == i) continue;
                if (B[j].lt == B[i].lt ? j < i : B[j].lt.divides(B[i].lt)) redundant = true;
            }
            if (!redundant) keep.push_back(i);
        }
        std::vector<BasisEl> kept;
        kept.reserve(keep.size());
        for (int i : keep) kept.push_back(std::move(B[i]));
        std::vector<Terms> out;
        out.reserve(kept.size());
        for (size_t i = 0; i < kept.size(); ++i) {
            Terms t = normal_form(kept[i].t, kept, static_cast<int>(i));
            make_monic(t);
            out.push_back(std::move(t));
        }
        std::sort(out.begin(), out.end(), [&](const Terms& x, const Terms& y) {
            return cmp_(x.front().mono, y.front().mono) < 0;
        });
        return out;
    }

private:
    RingPtr ring_;
    Cmp cmp_;
    Deadline deadline_;
};

template <class Cmp>
std::vector<BasisEl> as_basis(const Engine<Cmp>& eng, std::span<const Polynomial> G) {
    std::vector<BasisEl> B;
    B.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor polynomial");
        Terms t = eng.sorted(g);
        Engine<Cmp>::make_monic(t);
        Monomial lt = t.front().mono;
        B.push_back({std::move(t), std::move(lt)});
    }
    return B;
}

void require_weighted_homogeneous(std::span<const Polynomial> gens, const TermOrder& order,
                                  const std::string& who) {
    if (order.kind != TermOrder::Kind::Weighted) return;
    for (const auto& g : gens)
        if (!g.is_homogeneous())
            throw std::invalid_argument(
                who + ": weighted orders require homogeneous generators");
}

} // namespace

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G,
                       const TermOrder& order) {
    require_weighted_homogeneous(G, order, "normal_form");
    Engine<TermOrderCmp> eng(p.ring(), TermOrderCmp{&order}, {});
    auto B = as_basis(eng, G);
    return eng.to_poly(eng.normal_form(eng.sorted(p), B));
}

GroebnerBasis buchberger(const IdealSpec& I, const TermOrder& order, const Deadline& deadline) {
    require_weighted_homogeneous(I.generators, order, "buchberger");
    Engine<TermOrderCmp> eng(I.ring, TermOrderCmp{&order}, deadline);

    std::vector<Terms> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) gens.push_back(eng.sorted(g));
    auto basis_terms = eng.reduced_basis(std::move(gens));

    GroebnerBasis gb{order, {}, I};
    gb.basis.reserve(basis_terms.size());
    for (auto& t : basis_terms) gb.basis.push_back(eng.to_poly(std::move(t)));

    // Membership certificate: every input generator reduces to zero.
    auto B = as_basis(eng, gb.basis);
    for (const auto& g : I.generators)
        if (!eng.normal_form(eng.sorted(g), B).empty())
            throw std::logic_error("buchberger: generator fails membership certificate");
    return gb;
}

Monomial GroebnerBasis::leading_monomial(size_t i) const {
    const auto& terms = basis[i].terms();
    size_t best = 0;
    for (size_t t = 1; t < terms.size(); ++t)
        if (order.cmp(terms[t].mono, terms[best].mono) > 0) best = t;
    return terms[best].mono;
}

IdealSpec initial_ideal(const GroebnerBasis& gb) {
    std::vector<Polynomial> gens;
    gens.reserve(gb.basis.size());
    for (size_t i = 0; i < gb.basis.size(); ++i)
        gens.push_back(Polynomial::monomial(gb.source.ring, Rational(1),
                                            gb.leading_monomial(i)));
    return IdealSpec(gb.source.ring, std::move(gens),
                     "in(" + gb.source.label + "; " + gb.order.describe() + ")");
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
    if (p.is_zero()) return true;
    Engine<TermOrderCmp> eng(p.ring(), TermOrderCmp{&gb.order}, {});
    auto B = as_basis(eng, gb.basis);
    return eng.normal_form(eng.sorted(p), B).empty();
}

bool ideal_equal(const IdealSpec& I, const IdealSpec& J, const TermOrder& order,
                 const Deadline& deadline) {
    if (!I.ring->same_as(*J.ring)) throw std::invalid_argument("ideal_equal: ring mismatch");
    GroebnerBasis gi = buchberger(I, order, deadline);
    for (const auto& g : J.generators)
        if (!ideal_member(g, gi)) return false;
    GroebnerBasis gj = buchberger(J, order, deadline);
    for (const auto& g : I.generators)
        if (!ideal_member(g, gj)) return false;
    return true;
}

IdealSpec initial_forms_ideal(const IdealSpec& I, const WeightVector& w,
                              const Deadline& deadline) {
    if (I.generators.empty()) return IdealSpec(I.ring, {}, "in_w(" + I.label + ")");
    TermOrder ord = TermOrder::weighted(w);
    GroebnerBasis gb = buchberger(I, ord, deadline);
    std::vector<Polynomial> forms;
    forms.reserve(gb.basis.size());
    for (const auto& g : gb.basis) {
        Polynomial f = g.weight_initial_form(w);
        if (std::find(forms.begin(), forms.end(), f) == forms.end()) forms.push_back(f);
    }
    return IdealSpec(I.ring, std::move(forms), "in_w(" + I.label + ")");
}

WeightHomogenization initial_forms_by_homogenization(const IdealSpec& I, const WeightVector& w,
                                                     const Deadline& deadline) {
    I.require_bihomogeneous();
    if (I.generators.empty())
        throw std::invalid_argument("initial_forms_by_homogenization: empty ideal");

    RingPtr ext = I.ring->with_homogenizer();
    const int h = ext->homogenizer();
    WeightVector wh = w;
    wh.w.push_back(1);

    // Weight-homogenize each generator: a term of weight u picks up h^(u-min).
    std::vector<Terms> gens;
    for (const auto& g : I.generators) {
        long mu = g.min_weight(w);
        Terms t;
        t.reserve(g.num_terms());
        for (const auto& tm : g.terms()) {
            long u = tm.mono.weight(w) - mu;
            std::vector<uint8_t> e = tm.mono.exponents_vec();
            e.push_back(static_cast<uint8_t>(u));
            if (u < 0 || u > 255)
                throw std::overflow_error("initial_forms_by_homogenization: weight spread");
            t.push_back({tm.coeff, Monomial(*ext, std::move(e))});
        }
        gens.push_back(std::move(t));
    }

    Engine<HWeightRevlexCmp> eng(ext, HWeightRevlexCmp{&wh}, deadline);
    for (auto& g : gens)
        std::sort(g.begin(), g.end(), [&](const Term& x, const Term& y) {
            return HWeightRevlexCmp{&wh}(x.mono, y.mono) > 0;
        });

    // Saturate by h: the order puts minimal h-powers in leading terms, so
    // dividing basis elements by h and recomputing stabilizes on (J : h^inf).
    std::vector<Terms> basis;
    for (int round = 0;; ++round) {
        if (round > 64)
            throw std::logic_error("initial_forms_by_homogenization: saturation loop");
        basis = eng.reduced_basis(std::move(gens));
        bool divided = false;
        gens.clear();
        for (auto& t : basis) {
            int k = 255;
            for (const auto& tm : t) k = std::min(k, tm.mono.exponent(h));
            if (k > 0) {
                divided = true;
                for (auto& tm : t) {
                    std::vector<uint8_t> e = tm.mono.exponents_vec();
                    e[static_cast<size_t>(h)] = static_cast<uint8_t>(e[static_cast<size_t>(h)] - k);
                    tm.mono = Monomial(*ext, e);
                }
            }
            gens.push_back(std::move(t));
        }
        if (!divided) {
            basis = std::move(gens);
            break;
        }
    }

    std::vector<Polynomial> family;
    family.reserve(basis.size());
    for (auto& t : basis) family.push_back(eng.to_poly(std::move(t)));

    std::vector<Polynomial> limit;
    for (const auto& g : family) {
        Polynomial g0 = g.substitute(h, Rational(0));
        if (g0.is_zero())
            throw std::logic_error("initial_forms_by_homogenization: basis element divisible by h");
        Polynomial gc = g0.drop_variable(I.ring, h);
        if (std::find(limit.begin(), limit.end(), gc) == limit.end()) limit.push_back(gc);
    }

    return {IdealSpec(ext, std::move(family), I.label + " h-family"),
            IdealSpec(I.ring, std::move(limit), "in_w(" + I.label + ") via h")};
}

bool spair_reductions_vanish(const GroebnerBasis& gb, size_t max_pairs) {
    Engine<TermOrderCmp> eng(gb.source.ring, TermOrderCmp{&gb.order}, {});
    auto B = as_basis(eng, gb.basis);
    const Ring& ring = *gb.source.ring;
    size_t done = 0;
    for (size_t i = 0; i < B.size(); ++i) {
        for (size_t j = i + 1; j < B.size(); ++j) {
            if (done++ >= max_pairs) return true;
            Monomial lcm = B[i].lt.lcm(ring, B[j].lt);
            Terms shifted;
            shifted.reserve(B[i].t.size());
            const Monomial mi = lcm.div(ring, B[i].lt);
            for (const auto& tm : B[i].t) shifted.push_back({tm.coeff, tm.mono.mul(ring, mi)});
            Terms s = eng.sub_scaled(std::move(shifted), Rational(1),
                                     lcm.div(ring, B[j].lt), B[j].t);
            if (!eng.normal_form(std::move(s), B).empty()) return false;
        }
    }
    return true;
}

std::string GroebnerBasis::to_text() const {
    std::ostringstream os;
    os << "groebner v1\n";
    os << "vars";
    for (int v = 0; v < source.ring->num_vars(); ++v) os << " " << source.ring->name(v);
    os << "\n";
    os << "order " << order.describe() << "\n";
    os << "label " << source.label << "\n";
    os << "count " << basis.size() << "\n";
    for (const auto& g : basis) os << g.str() << "\n";
    return os.str();
}

GroebnerBasis parse_groebner_text(RingPtr ring, const std::string& text) {
    std::istringstream is(text);
    std::string line;
    auto next = [&]() {
        if (!std::getline(is, line)) throw std::invalid_argument("groebner text: truncated");
        return line;
    };
    if (next() != "groebner v1") throw std::invalid_argument("groebner text: bad header");
    std::string vars = next();
    std::string expect = "vars";
    for (int v = 0; v < ring->num_vars(); ++v) expect += " " + ring->name(v);
    if (vars != expect) throw std::invalid_argument("groebner text: ring mismatch");

    std::string ordline = next();
    if (ordline.rfind("order ", 0) != 0) throw std::invalid_argument("groebner text: order line");
    std::string odesc = ordline.substr(6);
    TermOrder order;
    if (odesc == "grevlex") {
        order = TermOrder::grevlex();
    } else if (odesc == "lex") {
        order = TermOrder::lex();
    } else if (odesc.rfind("weighted[", 0) == 0 && odesc.back() == ']') {
        WeightVector w;
        std::string body = odesc.substr(9, odesc.size() - 10);
        std::istringstream ws(body);
        std::string tok;
        while (std::getline(ws, tok, ',')) w.w.push_back(std::stol(tok));
        if (static_cast<int>(w.w.size()) != ring->num_vars())
            throw std::invalid_argument("groebner text: weight size");
        order = TermOrder::weighted(std::move(w));
    } else {
        throw std::invalid_argument("groebner text: unknown order " + odesc);
    }

    std::string labline = next();
    if (labline.rfind("label ", 0) != 0) throw std::invalid_argument("groebner text: label line");
    std::string label = labline.substr(6);

    std::string cntline = next();
    if (cntline.rfind("count ", 0) != 0) throw std::invalid_argument("groebner text: count line");
    size_t count = std::stoul(cntline.substr(6));

    std::vector<Polynomial> basis;
    basis.reserve(count);
    for (size_t i = 0; i < count; ++i) basis.push_back(Polynomial::parse(ring, next()));

    IdealSpec src(ring, basis, label);
    return GroebnerBasis{order, std::move(basis), std::move(src)};
}

} // namespace cva
