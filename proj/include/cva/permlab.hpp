#pragma once

#include <string>
#include <vector>

namespace cva {

/// Permutation in one-line notation; pi(i) is 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation longest(int n); // w0
    /// Parses "231" for n <= 9, "2,3,1" beyond.
    static Permutation parse(const std::string& s);

    int size() const { return static_cast<int>(line_.size()); }
    int operator()(int i) const { return line_[i - 1]; } // 1-based
    const std::vector<int>& one_line() const { return line_; }

    Permutation inverse() const;
    Permutation conjugate_by_w0() const; // w0 * pi * w0
    int length() const;                  // inversion count
    bool is_identity() const;

    /// Standard concatenation: block direct sum in S_{k+m}.
    Permutation star(const Permutation& rho) const;

    bool operator==(const Permutation& o) const { return line_ == o.line_; }
    bool operator<(const Permutation& o) const { return line_ < o.line_; }

    std::string str() const;

private:
    std::vector<int> line_;
};

/// 0/1 matrix with at most one 1 per row and column. Encoded per row as the
/// 1-based column of the 1, or 0 for an empty row.
class PartialPerm {
public:
    PartialPerm() = default;
    PartialPerm(int n, std::vector<int> row_cols);
    explicit PartialPerm(const Permutation& pi);

    static PartialPerm zero(int n) { return PartialPerm(n, std::vector<int>(n, 0)); }

    int size() const { return n_; }
    int rank() const;
    /// Column of the 1 in row i (1-based), 0 if none.
    int col_of_row(int i) const { return rc_[i - 1]; }
    bool has_one(int i, int j) const { return rc_[i - 1] == j; }
    bool is_permutation() const { return rank() == n_; }
    Permutation as_permutation() const;

    bool operator==(const PartialPerm& o) const { return n_ == o.n_ && rc_ == o.rc_; }

    std::string str() const; // digit string, 0 = empty row

private:
    int n_ = 0;
    std::vector<int> rc_;
};

/// Dimension of the B+ x B+ orbit through p: the number of matrix entries
/// with a 1 of p on them, directly below, or directly to the left.
int orbit_dimension(const PartialPerm& p);

/// n^2 + rank(p).
int stratum_dimension(const PartialPerm& p);

/// Number of entries with no 1 of p strictly to the left or strictly below;
/// the fiber dimension over the orbit in the stratum fibration.
int fiber_dimension(const PartialPerm& p);

/// Count of 1s of pi in the southwest i x j rectangle (bottom i rows, first
/// j columns).
int southwest_rank(const Permutation& pi, int i, int j);

/// Bruhat order via the rank-matrix criterion in the southwest convention:
/// rho <= pi iff every southwest rectangle of rho holds at most as many 1s
/// as the same rectangle of pi.
bool bruhat_leq(const Permutation& rho, const Permutation& pi);

std::vector<Permutation> enumerate_permutations(int n);
std::vector<PartialPerm> enumerate_partial_perms(int n); // n <= 6

} // namespace cva
