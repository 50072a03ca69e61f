#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <algorithm>

#include "cva/permlab.hpp"

using namespace cva;

namespace {

// Independent Bruhat oracle: transitive closure of length-decreasing
// transposition moves, computed by downward BFS from pi.
bool bruhat_leq_oracle(const Permutation& rho, const Permutation& pi) {
    if (rho == pi) return true;
    std::set<std::vector<int>> seen;
    std::vector<Permutation> frontier{pi};
    seen.insert(pi.one_line());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier) {
            const int n = p.size();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    auto l = p.one_line();
                    std::swap(l[static_cast<size_t>(i - 1)], l[static_cast<size_t>(j - 1)]);
                    Permutation q(l);
                    if (q.length() >= p.length()) continue;
                    if (q == rho) return true;
                    if (seen.insert(q.one_line()).second) next.push_back(q);
                }
        }
        frontier = std::move(next);
    }
    return false;
}

} // namespace

TEST_CASE("permutation basics") {
    Permutation p = Permutation::parse("231");
    CHECK(p(1) == 2);
    CHECK(p(3) == 1);
    CHECK(p.str() == "231");
    CHECK(p.inverse().str() == "312");
    CHECK(Permutation::parse("312").inverse().str() == "231");
    CHECK(Permutation::parse("321").length() == 3);
    CHECK(Permutation::longest(4).str() == "4321");
    CHECK(Permutation::identity(3).is_identity());
    CHECK_THROWS_AS(Permutation::parse("221"), std::invalid_argument);
}

TEST_CASE("conjugation by w0") {
    CHECK(Permutation::parse("231").conjugate_by_w0().str() == "312");
    for (const char* s : {"1234", "2143", "3412", "4132"}) {
        Permutation p = Permutation::parse(s);
        CHECK(p.conjugate_by_w0().conjugate_by_w0() == p);
        CHECK(p.conjugate_by_w0().length() == p.length());
    }
}

TEST_CASE("star concatenation") {
    CHECK(Permutation::parse("21").star(Permutation::parse("1")).str() == "213");
    CHECK(Permutation::parse("1").star(Permutation::parse("1")).str() == "12");
    CHECK(Permutation::parse("21").star(Permutation::parse("21")).str() == "2143");
}

TEST_CASE("length complement identity") {
    for (int n = 2; n <= 5; ++n) {
        Permutation w0 = Permutation::longest(n);
        for (const auto& p : enumerate_permutations(n)) {
            // w0 * p composes as (w0 p)(i) = n+1-p(i)
            std::vector<int> l;
            for (int i = 1; i <= n; ++i) l.push_back(n + 1 - p(i));
            CHECK(p.length() + Permutation(l).length() == n * (n - 1) / 2);
        }
        CHECK(w0.length() == n * (n - 1) / 2);
    }
}

TEST_CASE("partial permutations") {
    PartialPerm zero = PartialPerm::zero(2);
    CHECK(zero.rank() == 0);
    CHECK(zero.str() == "00");
    PartialPerm p(2, {1, 0});
    CHECK(p.rank() == 1);
    CHECK(!p.is_permutation());
    PartialPerm q(Permutation::parse("21"));
    CHECK(q.is_permutation());
    CHECK(q.as_permutation().str() == "21");
    CHECK_THROWS_AS(PartialPerm(2, {1, 1}), std::invalid_argument);
}

TEST_CASE("orbit dimension") {
    CHECK(orbit_dimension(PartialPerm(Permutation::identity(2))) == 3);
    CHECK(orbit_dimension(PartialPerm(Permutation::longest(2))) == 4);
    CHECK(orbit_dimension(PartialPerm::zero(3)) == 0);
    for (int n = 2; n <= 5; ++n) {
        CHECK(orbit_dimension(PartialPerm(Permutation::longest(n))) == n * n);
        CHECK(orbit_dimension(PartialPerm(Permutation::identity(n))) == n * (n + 1) / 2);
    }
}

TEST_CASE("stratum dimension") {
    for (const auto& p : enumerate_permutations(3))
        CHECK(stratum_dimension(PartialPerm(p)) == 12);
    CHECK(stratum_dimension(PartialPerm::zero(2)) == 4);
    CHECK(stratum_dimension(PartialPerm(2, {1, 0})) == 5);
}

TEST_CASE("fiber double count") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : enumerate_partial_perms(n))
            CHECK(stratum_dimension(p) - orbit_dimension(p) == fiber_dimension(p));
}

TEST_CASE("non-permutation strata sit below the component dimension") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : enumerate_partial_perms(n))
            if (!p.is_permutation()) CHECK(stratum_dimension(p) < n * n + n);
}

TEST_CASE("bruhat order examples") {
    Permutation id3 = Permutation::identity(3);
    for (const auto& p : enumerate_permutations(3)) CHECK(bruhat_leq(id3, p));
    CHECK(bruhat_leq(Permutation::parse("132"), Permutation::parse("312")));
    CHECK(!bruhat_leq(Permutation::parse("321"), Permutation::parse("312")));

    int below = 0;
    for (const auto& p : enumerate_permutations(3))
        if (bruhat_leq(p, Permutation::parse("312"))) ++below;
    CHECK(below == 4);
}

TEST_CASE("bruhat order properties and oracle agreement") {
    for (int n = 2; n <= 4; ++n) {
        auto perms = enumerate_permutations(n);
        Permutation w0 = Permutation::longest(n);
        for (const auto& a : perms) {
            CHECK(bruhat_leq(a, a));
            CHECK(bruhat_leq(a, w0));
            for (const auto& b : perms) {
                CHECK(bruhat_leq(a, b) == bruhat_leq_oracle(a, b));
                if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
                if (bruhat_leq(a, b)) CHECK(a.length() <= b.length());
            }
        }
        // transitivity
        for (const auto& a : perms)
            for (const auto& b : perms)
                if (bruhat_leq(a, b))
                    for (const auto& c : perms)
                        if (bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
    }
}

TEST_CASE("enumerations are deterministic and complete") {
    CHECK(enumerate_permutations(3).size() == 6);
    CHECK(enumerate_partial_perms(1).size() == 2);
    CHECK(enumerate_partial_perms(2).size() == 7);
    CHECK(enumerate_partial_perms(3).size() == 34);
    auto pps = enumerate_partial_perms(2);
    std::vector<std::string> codes;
    for (const auto& p : pps) codes.push_back(p.str());
    CHECK(std::is_sorted(codes.begin(), codes.end()));
    CHECK_THROWS_AS(enumerate_partial_perms(7), std::invalid_argument);
}
