#pragma once

#include <optional>
#include <utility>

#include "cva/groebner.hpp"
#include "cva/matrixq.hpp"
#include "cva/permlab.hpp"

namespace cva {

/// Matrix of polynomials with exact arithmetic.
struct SymbolicMatrix {
    int n = 0;
    RingPtr ring;
    std::vector<Polynomial> e; // row-major

    const Polynomial& entry(int i, int j) const { return e[static_cast<size_t>(i - 1) * n + (j - 1)]; }
    Polynomial& entry(int i, int j) { return e[static_cast<size_t>(i - 1) * n + (j - 1)]; }

    SymbolicMatrix mul(const SymbolicMatrix& o) const;
    SymbolicMatrix sub(const SymbolicMatrix& o) const;
    SymbolicMatrix transpose() const;
    Polynomial det() const;
};

/// Generic matrices (X, Y) whose entries are the 2n^2 ring variables.
std::pair<SymbolicMatrix, SymbolicMatrix> generic_matrices(int n);
std::pair<SymbolicMatrix, SymbolicMatrix> generic_matrices(const RingPtr& ring);

/// Fixes which of the two one-parameter rescalings realizes the degeneration:
/// Standard is the one whose limit keeps XY strictly-upper and YX
/// strictly-lower entries as equations. Flipped is its w0-conjugate.
enum class Orientation { Standard, Flipped };

struct SchemeTag {
    enum class Kind { Commuting, D, Dz, D0, E, EpiCandidate, ClosureUnion };

    Kind kind;
    Rational z;                   // Dz only
    std::optional<Permutation> pi; // EpiCandidate / ClosureUnion

    static SchemeTag commuting() { return {Kind::Commuting, Rational(0), {}}; }
    static SchemeTag diag_commutator() { return {Kind::D, Rational(0), {}}; }
    static SchemeTag dz(Rational zz) { return {Kind::Dz, std::move(zz), {}}; }
    static SchemeTag d0() { return {Kind::D0, Rational(0), {}}; }
    static SchemeTag upper_upper() { return {Kind::E, Rational(0), {}}; }
    static SchemeTag epi_candidate(Permutation p) { return {Kind::EpiCandidate, Rational(0), std::move(p)}; }
    static SchemeTag closure_union(Permutation p) { return {Kind::ClosureUnion, Rational(0), std::move(p)}; }

    std::string str(int n) const;
};

/// Generators of the scheme ideal, bihomogeneous by construction.
IdealSpec build_ideal(const SchemeTag& tag, int n, Orientation o = Orientation::Standard);

/// Matrix Schubert rank conditions: for every southwest i x j rectangle whose
/// count r of 1s of pi falls below min(i,j), all (r+1)-minors of that
/// rectangle of M. Duplicates removed.
std::vector<Polynomial> schubert_rank_minors(const SymbolicMatrix& M, const Permutation& pi);

/// Substitution X[i][j] -> X[n+1-i][j], Y[i][j] -> Y[i][n+1-j] applied to
/// every generator (the w0 twist identifying the degenerate limit with the
/// upper-upper scheme).
IdealSpec tau_substitute(const IdealSpec& I, int n);

/// w(X[i][j]) = i-1, w(Y[i][j]) = -(j-1); negated when flipped.
WeightVector degeneration_weight(int n, Orientation o = Orientation::Standard);

struct SamplePointParams {
    Permutation pi;
    std::vector<Rational> t;
    std::vector<Rational> s;
    RationalMatrix u1; // strictly-upper unipotent
    RationalMatrix u2;
};

SamplePointParams central_params(Permutation pi, std::vector<Rational> t, std::vector<Rational> s);

/// s invertible, the values t_i/s_i pairwise distinct, and the products
/// s_i t_i pairwise distinct.
bool is_generic(const SamplePointParams& p);

/// (X, Y) = (U1 P(pi) diag(t) U2^-1, U2 diag(s) P(pi)^-1 U1^-1) with the
/// convention P(pi)[i][pi(i)] = 1.
std::pair<RationalMatrix, RationalMatrix> sample_point(const SamplePointParams& p);

/// Rank of the Jacobian of the generators at a point of the scheme; errors
/// when the point does not satisfy the generators.
int jacobian_rank(const IdealSpec& I, const std::pair<RationalMatrix, RationalMatrix>& point);

/// n x 2n matrix whose column k is diag(X^(k-1)) and column n+k is
/// diag(Y^(k-1)), k = 1..n.
RationalMatrix power_diagonal_matrix(const RationalMatrix& X, const RationalMatrix& Y);

struct TaoReport {
    bool applies; // [X,Y] diagonal and nonzero
    int rank;     // rank of the power-diagonal matrix
    bool pass;    // vacuous or rank <= n-1
};

TaoReport tao_rank_check(const RationalMatrix& X, const RationalMatrix& Y);

/// (XY)_ii == (YX)_{pi(i),pi(i)} for all i; use_inverse swaps the action
/// convention to pi^-1.
bool diag_lemma_check(const RationalMatrix& X, const RationalMatrix& Y, const Permutation& pi,
                      bool use_inverse = false);

/// Evaluates every generator at the point; true when all vanish.
bool point_on_scheme(const IdealSpec& I, const std::pair<RationalMatrix, RationalMatrix>& point);

} // namespace cva
