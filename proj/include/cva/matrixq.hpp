#pragma once

#include <vector>

#include "cva/rational.hpp"

namespace cva {

/// Dense matrix over the rationals with exact arithmetic. Rank goes through
/// fraction-free (Bareiss) elimination on a denominator-cleared integer copy.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RationalMatrix identity(int n);
    static RationalMatrix diagonal(const std::vector<Rational>& d);
    /// Permutation matrix with the 1 of row i in column pi(i) (1-based images).
    static RationalMatrix permutation(const std::vector<int>& one_line);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& c) const;
    RationalMatrix transpose() const;
    RationalMatrix pow(int k) const;
    RationalMatrix inverse() const; // throws on singular input

    bool operator==(const RationalMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    bool is_zero() const;
    bool is_diagonal() const;
    bool is_upper_triangular() const;
    /// Strictly upper triangular off the diagonal with unit diagonal.
    bool is_upper_unipotent() const;

    std::vector<Rational> diagonal_entries() const;

    int rank() const;

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y);

} // namespace cva
