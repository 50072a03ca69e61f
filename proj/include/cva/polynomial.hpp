#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cva/monomial.hpp"
#include "cva/rational.hpp"

namespace cva {

struct Term {
    Rational coeff;
    Monomial mono;
};

/// Multivariate polynomial over the rationals in canonical form: terms sorted
/// descending under grevlex, no zero coefficients, no duplicate monomials.
/// Equality of polynomials is term-list equality. Values are immutable after
/// construction and safe to share across threads.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, int v);
    static Polynomial monomial(RingPtr ring, const Rational& c, Monomial m);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    /// Leading term under canonical grevlex.
    const Term& leading_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Rational& c, const Monomial& m) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Total degree of the largest term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_bihomogeneous() const;
    /// Bidegree of a bihomogeneous polynomial.
    Bidegree bidegree() const;

    Polynomial derivative(int v) const;
    Rational evaluate(std::span<const Rational> values) const;

    /// Applies an index remap var -> image variable (same or other ring).
    Polynomial map_variables(RingPtr target, const std::vector<int>& image) const;
    /// Sets variable v to a rational constant; result lives in same ring.
    Polynomial substitute(int v, const Rational& value) const;
    /// Drops a variable that occurs in no term, contracting to `target`
    /// (target must list the remaining variables in the same order).
    Polynomial drop_variable(RingPtr target, int v) const;

    /// Sum of the terms of minimal w-weight. Errors on the zero polynomial.
    Polynomial weight_initial_form(const WeightVector& w) const;
    long min_weight(const WeightVector& w) const;
    long max_weight(const WeightVector& w) const;

    /// Canonical text rendering, e.g. "X[1][1]*Y[1][2] - 2/3*Y[2][2]".
    std::string str() const;

    /// Parses the canonical rendering back. Throws on malformed input.
    static Polynomial parse(RingPtr ring, const std::string& text);

private:
    void normalize();

    RingPtr ring_;
    std::vector<Term> terms_; // descending grevlex
};

enum class PolyOp { Add, Sub, Mul };

/// Arithmetic entry point keyed by an operation tag; operands must share a ring.
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op);

} // namespace cva
