#pragma once

#include <map>
#include <utility>

#include "cva/groebner.hpp"

namespace cva {

/// Numerator of the Z^2-graded Hilbert series of a monomial quotient:
/// Hilb(R/M) = K(a,b) / ((1-a)^p (1-b)^q).
struct KPolynomial {
    std::map<std::pair<int, int>, long long> terms; // (a-exp, b-exp) -> coeff

    bool operator==(const KPolynomial&) const = default;
    std::string str() const;
};

/// Multidegree in N[A,B]: nonnegative coefficients, homogeneous of total
/// degree equal to the codimension.
struct BidegreePolynomial {
    std::map<std::pair<int, int>, long long> terms; // (A-exp, B-exp) -> coeff
    int degree = 0;

    static BidegreePolynomial one() { return {{{{0, 0}, 1}}, 0}; }

    long long coeff(int a, int b) const;
    long long at_ones() const;
    BidegreePolynomial mul(const BidegreePolynomial& o) const;
    BidegreePolynomial times_ab_power(int k) const;
    BidegreePolynomial swapped() const; // A <-> B

    bool operator==(const BidegreePolynomial&) const = default;

    /// Canonical rendering, descending A-exponent:
    /// "A^6 + 3A^5B + 7A^4B^2 + ... + B^6".
    std::string str() const;
};

/// (A+B)^m expanded.
BidegreePolynomial binomial_power(int m);

using Grading = std::vector<Bidegree>;

/// All variables of weight (1,0); collapses the bigrading to the total one.
Grading total_grading(int num_vars);

/// Krull dimension of R/M for a proper monomial ideal M: the largest set of
/// variables containing no generator's support. Exhaustive subset search when
/// the generators touch at most 20 variables, branch-and-bound beyond.
int monomial_dimension(const IdealSpec& M, int num_vars);

/// K-polynomial of a monomial ideal under the given grading. Computed by
/// inclusion-exclusion over minimal generators (up to 24 of them) and by
/// pivot-variable recursion; when both run they must agree.
KPolynomial k_polynomial(const IdealSpec& M, const Grading& grading);

/// Lowest homogeneous component of K(1-alpha, 1-beta); its degree must equal
/// the codimension and its coefficients must be nonnegative.
BidegreePolynomial multidegree(const IdealSpec& M, const Grading& grading);

/// Projective degree of a bihomogeneous ideal through its initial ideal.
long long degree(const GroebnerBasis& gb);
long long degree(const IdealSpec& I, const TermOrder& order, const Deadline& deadline = {});

/// Bidegree (multidegree under the X->A, Y->B grading); a term-order
/// invariant of the ideal.
BidegreePolynomial bidegree(const GroebnerBasis& gb);
BidegreePolynomial bidegree(const IdealSpec& I, const TermOrder& order,
                            const Deadline& deadline = {});

using BidegreeTable = std::map<std::pair<int, int>, long long>;

/// Counts standard monomials of M per bidegree by direct enumeration, up to
/// the given total degree. Guarded to at most 10 variables and degree 8.
BidegreeTable hilbert_function_bruteforce(const IdealSpec& M, const Grading& grading,
                                          int up_to_degree);

/// Expands K/((1-a)^p (1-b)^q) up to the given total degree for comparison
/// against the brute-force table.
BidegreeTable series_counts(const KPolynomial& K, const Grading& grading, int up_to_degree);

} // namespace cva
