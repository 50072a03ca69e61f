// Acceptance suite: runs every gate criterion and prints one PASS/FAIL line
// per criterion. Exits nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cva/commands.hpp"
#include "cva/hilbert.hpp"
#include "cva/parallel.hpp"
#include "cva/rng.hpp"
#include "cva/schemes.hpp"

using namespace cva;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    if (!ok) ++g_failures;
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
                err.empty() ? "" : " -- exception: ", err.c_str());
    std::fflush(stdout);
}

struct Degrees {
    std::map<std::string, long long> d;
    std::map<std::string, BidegreePolynomial> dp;
};

Degrees degree_table(Session& s, int n) {
    Degrees out;
    for (const auto& row : s.degrees_for(n)) {
        if (!row.d || !row.d_prime) throw std::runtime_error("degree table incomplete");
        out.d[row.pi] = *row.d;
        out.dp[row.pi] = *row.d_prime;
    }
    return out;
}

RunConfig base_config() {
    RunConfig cfg;
    cfg.seed = 2024;
    cfg.threads = par::hardware_threads();
    cfg.budget_seconds = 540; // inside the 10-minute bound of criterion 1
    return cfg;
}

} // namespace

int main() {
    RunConfig cfg = base_config();
    Session session(cfg);

    // 1. Degree table reproduction at n=3.
    criterion(1, "degree table n=3 is (123,213,132,312,231,321) -> (1,3,3,13,13,31)", [&] {
        Degrees t = degree_table(session, 3);
        std::map<std::string, long long> expect{{"123", 1}, {"213", 3}, {"132", 3},
                                                {"312", 13}, {"231", 13}, {"321", 31}};
        return t.d == expect;
    });

    // 2. Bidegree reproduction of the displayed polynomials.
    criterion(2, "displayed bidegrees match coefficient-for-coefficient", [&] {
        Degrees t2 = degree_table(session, 2);
        Degrees t3 = degree_table(session, 3);
        BidegreePolynomial d21{{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}, 2};
        BidegreePolynomial heavy{ // displayed as 2A^5B + 4A^4B^2 + 4A^3B^3 + 2A^2B^4 + AB^5
            {{{5, 1}, 2}, {{4, 2}, 4}, {{3, 3}, 4}, {{2, 4}, 2}, {{1, 5}, 1}}, 6};
        BidegreePolynomial light = heavy.swapped();
        BidegreePolynomial d321{{{{6, 0}, 1}, {{5, 1}, 3}, {{4, 2}, 7}, {{3, 3}, 9},
                                 {{2, 4}, 7}, {{1, 5}, 3}, {{0, 6}, 1}}, 6};
        bool pair_ok = t3.dp.at("312") == heavy && t3.dp.at("231") == light &&
                       t3.dp.at("231").swapped() == t3.dp.at("312");
        return t2.dp.at("21") == d21 && t3.dp.at("321") == d321 && pair_ok;
    });

    // 3. Sum identities at n=2, 3.
    criterion(3, "sum d = 2^(n^2-n) and sum d' = (A+B)^(n^2-n) for n=2,3", [&] {
        for (int n = 2; n <= 3; ++n) {
            Degrees t = degree_table(session, n);
            long long sum = 0;
            BidegreePolynomial psum;
            psum.degree = n * n - n;
            for (const auto& [pi, d] : t.d) sum += d;
            for (const auto& [pi, dp] : t.dp)
                for (const auto& [k, c] : dp.terms) psum.terms[k] += c;
            if (sum != (1ll << (n * n - n))) return false;
            if (!(psum == binomial_power(n * n - n))) return false;
        }
        return true;
    });

    // 4. Structural identities over S_3 and all star splits of n=2,3.
    criterion(4, "inverse/conjugate/star identities exact for n=2,3", [&] {
        std::vector<Degrees> t(4);
        for (int k = 1; k <= 3; ++k) t[static_cast<size_t>(k)] = degree_table(session, k);
        for (int n = 2; n <= 3; ++n) {
            const Degrees& tn = t[static_cast<size_t>(n)];
            for (const auto& [ps, d] : tn.d) {
                Permutation pi = Permutation::parse(ps);
                if (tn.d.at(pi.inverse().str()) != d) return false;
                if (tn.d.at(pi.conjugate_by_w0().str()) != d) return false;
                if (!(tn.dp.at(ps).swapped() == tn.dp.at(pi.inverse().str()))) return false;
                if (!(tn.dp.at(ps) == tn.dp.at(pi.inverse().conjugate_by_w0().str())))
                    return false;
            }
            for (int k = 1; k < n; ++k) {
                for (const auto& [ps, pd] : t[static_cast<size_t>(k)].d) {
                    for (const auto& [rs, rd] : t[static_cast<size_t>(n - k)].d) {
                        Permutation pi = Permutation::parse(ps);
                        Permutation rho = Permutation::parse(rs);
                        std::string st = pi.star(rho).str();
                        if (tn.d.at(st) != pd * rd) return false;
                        BidegreePolynomial expect = t[static_cast<size_t>(k)]
                                                        .dp.at(ps)
                                                        .mul(t[static_cast<size_t>(n - k)].dp.at(rs))
                                                        .times_ab_power(k * (n - k));
                        if (!(tn.dp.at(st) == expect)) return false;
                    }
                }
            }
        }
        return true;
    });

    // 5. Groebner degeneration.
    criterion(5, "in_w(I_D) = I_D0 for n=2,3; tau(I_D0) = I_E at generator level, n<=4", [&] {
        for (int n = 2; n <= 3; ++n) {
            IdealSpec D = build_ideal(SchemeTag::diag_commutator(), n);
            IdealSpec D0 = build_ideal(SchemeTag::d0(), n);
            IdealSpec inw = initial_forms_ideal(D, degeneration_weight(n));
            if (!ideal_equal(inw, D0, TermOrder::grevlex())) return false;
        }
        for (int n = 1; n <= 4; ++n) {
            IdealSpec D0 = build_ideal(SchemeTag::d0(), n);
            IdealSpec E = build_ideal(SchemeTag::upper_upper(), n);
            auto canon = [](const IdealSpec& I) {
                std::multiset<std::string> s;
                for (const auto& g : I.generators)
                    s.insert((g.leading_term().coeff.sign() < 0 ? -g : g).str());
                return s;
            };
            if (canon(tau_substitute(D0, n)) != canon(E)) return false;
        }
        return true;
    });

    // 6. Smooth-point suite.
    criterion(6, "Jacobian rank n^2-n at 25 generic central points, n=2,3,4, on I_E and I_D0", [&] {
        for (int n = 2; n <= 4; ++n) {
            RunConfig c = base_config();
            c.command = "smooth";
            c.n = n;
            c.trials = 25;
            Session s(c);
            auto checks = s.cmd_smooth();
            if (checks.size() != 1 || checks[0].status != "PASS") return false;
        }
        return true;
    });

    // 7. Power-diagonal rank proposition.
    criterion(7, "rank <= n-1 on 100 samples with diagonal nonzero commutator, n=2..5", [&] {
        for (int n = 2; n <= 5; ++n) {
            RunConfig c = base_config();
            c.command = "tao";
            c.n = n;
            c.trials = 100;
            Session s(c);
            auto checks = s.cmd_tao();
            if (checks.size() != 1 || checks[0].status != "PASS") return false;
            if (checks[0].payload["commutingWitness"]["rank"] != n) return false;
        }
        return true;
    });

    // 8. Dimension checks.
    criterion(8, "dim = n^2+n for in(I_E) and every candidate ideal, n=2,3", [&] {
        for (int n = 2; n <= 3; ++n) {
            IdealSpec E = build_ideal(SchemeTag::upper_upper(), n);
            GroebnerBasis ge = buchberger(E, TermOrder::grevlex());
            if (monomial_dimension(initial_ideal(ge), E.ring->num_vars()) != n * n + n)
                return false;
            for (const auto& pi : enumerate_permutations(n)) {
                IdealSpec epi = build_ideal(SchemeTag::epi_candidate(pi), n);
                GroebnerBasis gb = buchberger(epi, TermOrder::grevlex());
                if (monomial_dimension(initial_ideal(gb), epi.ring->num_vars()) != n * n + n)
                    return false;
            }
        }
        return true;
    });

    // 9. Conjecture reports at n=3.
    criterion(9, "all n=3 conjecture rows carry matchesPaperGl3 = true", [&] {
        RunConfig c = base_config();
        c.command = "conjectures";
        c.n = 3;
        c.trials = 1000;
        Session s(c);
        auto checks = s.cmd_conjectures();
        if (checks.size() != 6) return false;
        for (const auto& ch : checks) {
            if (ch.status != "REPORT") return false;
            if (!(ch.payload.contains("matchesPaperGl3") &&
                  ch.payload["matchesPaperGl3"] == true))
                return false;
        }
        return true;
    });

    // 10. Engine self-checks.
    criterion(10, "S-pair recheck, Hilbert oracle, canonicity, in_w containment", [&] {
        // (a) Post-hoc Buchberger criterion on every scheme basis we use.
        std::vector<GroebnerBasis> bases;
        for (const auto& tag :
             {SchemeTag::commuting(), SchemeTag::diag_commutator(), SchemeTag::d0(),
              SchemeTag::upper_upper(), SchemeTag::dz(Rational(2)),
              SchemeTag::epi_candidate(Permutation::parse("12")),
              SchemeTag::epi_candidate(Permutation::parse("21")),
              SchemeTag::closure_union(Permutation::parse("12")),
              SchemeTag::closure_union(Permutation::parse("21"))}) {
            bases.push_back(buchberger(build_ideal(tag, 2), TermOrder::grevlex()));
        }
        for (const auto& pi : enumerate_permutations(3)) {
            bases.push_back(
                buchberger(build_ideal(SchemeTag::epi_candidate(pi), 3), TermOrder::grevlex()));
        }
        bases.push_back(buchberger(build_ideal(SchemeTag::diag_commutator(), 3),
                                   TermOrder::weighted(degeneration_weight(3))));
        for (const auto& gb : bases)
            if (!spair_reductions_vanish(gb)) return false;

        // (b) Brute-force Hilbert oracle up to total degree 6 on all n=2
        // scheme ideals.
        for (const auto& gb : bases) {
            if (gb.source.ring->matrix_size() != 2) continue;
            IdealSpec in = initial_ideal(gb);
            KPolynomial K = k_polynomial(in, gb.source.ring->bidegrees());
            if (hilbert_function_bruteforce(in, gb.source.ring->bidegrees(), 6) !=
                series_counts(K, gb.source.ring->bidegrees(), 6))
                return false;
        }

        // (c) Reduced-basis canonicity under generator permutation.
        {
            IdealSpec epi = build_ideal(SchemeTag::epi_candidate(Permutation::parse("321")), 3);
            GroebnerBasis ref = buchberger(epi, TermOrder::grevlex());
            std::vector<Polynomial> gens(epi.generators.rbegin(), epi.generators.rend());
            GroebnerBasis rev =
                buchberger(IdealSpec(epi.ring, gens, "reversed"), TermOrder::grevlex());
            if (!(rev.basis == ref.basis)) return false;
        }

        // (d) in_w containment on 100 random ideal elements per scheme.
        for (int n = 2; n <= 3; ++n) {
            IdealSpec D = build_ideal(SchemeTag::diag_commutator(), n);
            WeightVector w = degeneration_weight(n);
            GroebnerBasis gin = buchberger(initial_forms_ideal(D, w), TermOrder::grevlex());
            SplitRng rng = SplitRng::keyed(99, "acceptance-inw", static_cast<uint64_t>(n));
            auto ring = D.ring;
            for (int it = 0; it < 100; ++it) {
                Polynomial p = Polynomial::zero(ring);
                for (const auto& g : D.generators) {
                    if (rng.rand_int(0, 1) == 0) continue;
                    std::vector<uint8_t> e(static_cast<size_t>(ring->num_vars()), 0);
                    e[static_cast<size_t>(rng.rand_int(0, ring->num_vars() - 1))] =
                        static_cast<uint8_t>(rng.rand_int(0, 2));
                    p = p + g.times_monomial(Rational(rng.rand_int(-7, 7), rng.rand_nonzero(1, 4)),
                                             Monomial(*ring, std::move(e)));
                }
                if (p.is_zero()) continue;
                if (!ideal_member(p.weight_initial_form(w), gin)) return false;
            }
        }
        return true;
    });

    std::printf("acceptance: %d of 10 criteria passed\n", 10 - g_failures);
    return g_failures ? 1 : 0;
}
