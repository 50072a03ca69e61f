#include <doctest.h>

#include <set>

#include "cva/polynomial.hpp"
#include "cva/rng.hpp"
#include "cva/schemes.hpp"
#include "test_util.hpp"

using namespace cva;
using namespace cva::testutil;

namespace {

Polynomial random_poly(const RingPtr& ring, SplitRng& rng, int max_terms) {
    std::vector<Term> terms;
    int k = static_cast<int>(rng.rand_int(0, max_terms));
    for (int t = 0; t < k; ++t) {
        std::vector<uint8_t> e(static_cast<size_t>(ring->num_vars()));
        for (auto& x : e) x = static_cast<uint8_t>(rng.rand_int(0, 3));
        terms.push_back({Rational(rng.rand_int(-9, 9), rng.rand_nonzero(1, 9)),
                         Monomial(*ring, std::move(e))});
    }
    return Polynomial(ring, std::move(terms));
}

Monomial random_mono(const RingPtr& ring, SplitRng& rng) {
    std::vector<uint8_t> e(static_cast<size_t>(ring->num_vars()));
    for (auto& x : e) x = static_cast<uint8_t>(rng.rand_int(0, 3));
    return Monomial(*ring, std::move(e));
}

} // namespace

TEST_CASE("poly_arith identities") {
    auto ring = xy_ring();
    Polynomial x = Polynomial::variable(ring, 0);
    Polynomial y = Polynomial::variable(ring, 1);
    Polynomial one = Polynomial::constant(ring, Rational(1));

    CHECK(poly_arith(x + y, x - y, PolyOp::Mul) == x * x - y * y);
    CHECK(poly_arith(x * y, Polynomial::zero(ring), PolyOp::Add) == x * y);
    CHECK(poly_arith(x + one, x + one, PolyOp::Mul) ==
          x * x + x.scaled(Rational(2)) + one);
    CHECK((x - x).is_zero());
}

TEST_CASE("canonical form is unique") {
    auto ring = xy_ring();
    Polynomial x = Polynomial::variable(ring, 0);
    Polynomial y = Polynomial::variable(ring, 1);
    Polynomial p = (x + y) * (x + y);
    Polynomial q = x * x + x * y + y * x + y * y;
    CHECK(p == q);
    CHECK(p.str() == q.str());
}

TEST_CASE("compare: grevlex, lex, weighted") {
    auto ring = uvw_ring();
    const Ring& R = *ring;
    Monomial u2v(R, {2, 1, 0});
    Monomial uvw(R, {1, 1, 1});
    CHECK(TermOrder::grevlex().cmp(u2v, uvw) > 0);

    Monomial u(R, {1, 0, 0});
    Monomial v5(R, {0, 5, 0});
    CHECK(TermOrder::lex().cmp(u, v5) > 0);
    CHECK(TermOrder::grevlex().cmp(u, v5) < 0);

    // min-first convention: the smaller-weight monomial is larger.
    TermOrder wo = TermOrder::weighted(WeightVector{{0, 1, 0}});
    Monomial vv(R, {0, 1, 0});
    CHECK(wo.cmp(u, vv) > 0);
}

TEST_CASE("orders are total and multiplicative") {
    auto ring = Ring::matrices(2);
    WeightVector rho = degeneration_weight(2);
    std::vector<TermOrder> orders{TermOrder::lex(), TermOrder::grevlex(),
                                  TermOrder::weighted(rho)};
    SplitRng rng = SplitRng::keyed(7, "order-props", 0);
    for (const auto& ord : orders) {
        for (int it = 0; it < 300; ++it) {
            Monomial a = random_mono(ring, rng);
            Monomial b = random_mono(ring, rng);
            Monomial m = random_mono(ring, rng);
            int c = ord.cmp(a, b);
            CHECK(c == -ord.cmp(b, a));
            if (c == 0) CHECK(a == b);
            // multiplicativity
            CHECK(ord.cmp(a.mul(*ring, m), b.mul(*ring, m)) == c);
        }
    }
}

TEST_CASE("ring axioms hold on random triples") {
    auto ring = uvw_ring();
    SplitRng rng = SplitRng::keyed(11, "ring-axioms", 0);
    for (int it = 0; it < 60; ++it) {
        Polynomial p = random_poly(ring, rng, 4);
        Polynomial q = random_poly(ring, rng, 4);
        Polynomial r = random_poly(ring, rng, 4);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("weight_initial_form") {
    auto ring = xy_ring();
    Polynomial x = Polynomial::variable(ring, 0);
    Polynomial y = Polynomial::variable(ring, 1);
    WeightVector w{{0, 1}};
    CHECK((x + y).weight_initial_form(w) == x);
    // weight-homogeneous input is returned unchanged
    Polynomial h = x * y + x * y.scaled(Rational(2));
    CHECK(h.weight_initial_form(WeightVector{{1, 1}}) == h);
    CHECK_THROWS_AS(Polynomial::zero(ring).weight_initial_form(w), std::invalid_argument);
}

TEST_CASE("degeneration weight picks the XY part of the commutator entry") {
    auto ring = Ring::matrices(2);
    auto [X, Y] = generic_matrices(ring);
    auto XY = X.mul(Y);
    auto YX = Y.mul(X);
    WeightVector w = degeneration_weight(2);
    Polynomial g12 = XY.entry(1, 2) - YX.entry(1, 2);
    CHECK(g12.weight_initial_form(w) == XY.entry(1, 2));
}

TEST_CASE("every diagonal-commutator generator splits into weights i-j and 0") {
    for (int n = 2; n <= 3; ++n) {
        auto ring = Ring::matrices(n);
        auto [X, Y] = generic_matrices(ring);
        auto XY = X.mul(Y);
        auto YX = Y.mul(X);
        WeightVector w = degeneration_weight(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                Polynomial g = XY.entry(i, j) - YX.entry(i, j);
                std::set<long> weights;
                for (const auto& t : g.terms()) weights.insert(t.mono.weight(w));
                CHECK(weights == std::set<long>{long(i - j), 0L});
                // each part is weight-homogeneous by construction of the set
                CHECK(g.weight_initial_form(w).num_terms() +
                      (g - g.weight_initial_form(w)).num_terms() == g.num_terms());
            }
    }
}

TEST_CASE("weight_initial_form is multiplicative") {
    auto ring = Ring::matrices(2);
    WeightVector w = degeneration_weight(2);
    SplitRng rng = SplitRng::keyed(3, "wif-mult", 0);
    for (int it = 0; it < 40; ++it) {
        Polynomial p = random_poly(ring, rng, 4);
        Polynomial q = random_poly(ring, rng, 4);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).weight_initial_form(w) ==
              p.weight_initial_form(w) * q.weight_initial_form(w));
    }
}

TEST_CASE("canonical text rendering") {
    auto ring = Ring::matrices(2);
    Polynomial p = Polynomial::variable(ring, ring->xvar(1, 1)) *
                       Polynomial::variable(ring, ring->yvar(1, 2)) -
                   Polynomial::variable(ring, ring->yvar(2, 2)).scaled(Rational(2, 3));
    CHECK(p.str() == "X[1][1]*Y[1][2] - 2/3*Y[2][2]");
    CHECK(Polynomial::zero(ring).str() == "0");

    Polynomial q = Polynomial::variable(ring, ring->xvar(2, 1));
    CHECK((q * q).str() == "X[2][1]^2");
    CHECK((-q).str() == "-X[2][1]");
    CHECK((q - Polynomial::constant(ring, Rational(1))).str() == "X[2][1] - 1");
}

TEST_CASE("parse inverts rendering") {
    auto ring = Ring::matrices(2);
    SplitRng rng = SplitRng::keyed(5, "render-parse", 0);
    for (int it = 0; it < 50; ++it) {
        Polynomial p = random_poly(ring, rng, 5);
        CHECK(Polynomial::parse(ring, p.str()) == p);
    }
    CHECK_THROWS_AS(Polynomial::parse(ring, "X[9][9]"), std::invalid_argument);
    for (const char* bad : {"", " + ", "1/0", "X[1][1]*", "*X[1][1]", "q^2", "2/"}) {
        CHECK_THROWS_AS(Polynomial::parse(ring, bad), std::exception);
    }
}

TEST_CASE("variable bidegrees and monomial caches") {
    auto ring = Ring::matrices(3);
    CHECK(ring->num_vars() == 18);
    Monomial m = Monomial::var(*ring, ring->xvar(2, 1)).mul(
        *ring, Monomial::var(*ring, ring->yvar(1, 3)));
    CHECK(m.degree() == 2);
    CHECK(m.dega() == 1);
    CHECK(m.degb() == 1);
}
