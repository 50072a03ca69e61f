#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cva/polynomial.hpp"

namespace cva {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Thrown when a Groebner computation exceeds its wall-clock budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A list of generators with a provenance label. Generators must be nonzero
/// and share one ring. Scheme ideals are additionally bihomogeneous in the
/// (A,B) grading; constructors that build them call require_bihomogeneous().
struct IdealSpec {
    RingPtr ring;
    std::vector<Polynomial> generators;
    std::string label;

    IdealSpec(RingPtr r, std::vector<Polynomial> gens, std::string lab);

    bool all_bihomogeneous() const;
    void require_bihomogeneous() const;
    bool is_monomial() const;
    bool is_proper() const; // no unit generator
};

/// Reduced Groebner basis: monic, interreduced, sorted ascending by leading
/// monomial under `order`. Uniquely determined by (ideal, order).
struct GroebnerBasis {
    TermOrder order;
    std::vector<Polynomial> basis;
    IdealSpec source;

    /// Leading monomial of basis[i] under `order` (the canonical term list is
    /// sorted by grevlex, which need not agree with the basis order).
    Monomial leading_monomial(size_t i) const;

    /// Deterministic text block: header plus one canonical polynomial per
    /// line in basis order. Used for golden tests and the disk cache.
    std::string to_text() const;
};

/// Remainder of p on division by G, reducing the largest reducible term
/// first and scanning G in listed order. No term of the result is divisible
/// by the leading term of any element of G.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G,
                       const TermOrder& order);

/// Buchberger's algorithm with the normal pair-selection strategy and the
/// Gebauer-Moeller criteria, followed by interreduction. For weighted orders
/// the generators must be homogeneous in total degree: min-first weight
/// orders are not global, and homogeneity is what keeps division inside
/// finitely many graded pieces.
GroebnerBasis buchberger(const IdealSpec& I, const TermOrder& order,
                         const Deadline& deadline = {});

/// Ideal of leading monomials of the reduced basis (a minimal monomial
/// generating set).
IdealSpec initial_ideal(const GroebnerBasis& gb);

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);

/// Mutual-membership test through two basis computations.
bool ideal_equal(const IdealSpec& I, const IdealSpec& J, const TermOrder& order,
                 const Deadline& deadline = {});

/// The initial-forms ideal in_w(I): Groebner basis under the w-refined
/// min-weight order, then the weight-initial forms of the basis elements.
IdealSpec initial_forms_ideal(const IdealSpec& I, const WeightVector& w,
                              const Deadline& deadline = {});

struct WeightHomogenization {
    IdealSpec family; // saturated ideal over the ring extended by h
    IdealSpec limit;  // fiber at h = 0, contracted back to the original ring
};

/// Fallback route to in_w(I) for bihomogeneous ideals: adjoin a homogenizing
/// variable h of weight 1, clear the weight spread of each generator with
/// powers of h, saturate by h (compute a basis under an h-last revlex
/// refinement and divide h out of basis elements until stable), and read off
/// the fiber at h = 0.
WeightHomogenization initial_forms_by_homogenization(const IdealSpec& I,
                                                     const WeightVector& w,
                                                     const Deadline& deadline = {});

/// Post-hoc Buchberger criterion: reduce S-polynomials of basis pairs.
/// Checks at most `max_pairs` pairs (all by default); returns false on the
/// first nonzero remainder.
bool spair_reductions_vanish(const GroebnerBasis& gb, size_t max_pairs = SIZE_MAX);

/// Parses the to_text() format back over the given ring.
GroebnerBasis parse_groebner_text(RingPtr ring, const std::string& text);

} // namespace cva
