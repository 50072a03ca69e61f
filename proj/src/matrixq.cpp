#include "cva/matrixq.hpp"

#include <stdexcept>

namespace cva {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
    RationalMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

RationalMatrix RationalMatrix::permutation(const std::vector<int>& one_line) {
    const int n = static_cast<int>(one_line.size());
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, one_line[i] - 1) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RationalMatrix: size mismatch in mul");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RationalMatrix: size mismatch in add");
    RationalMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RationalMatrix: size mismatch in sub");
    RationalMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RationalMatrix RationalMatrix::pow(int k) const {
    if (rows_ != cols_) throw std::invalid_argument("RationalMatrix: pow of non-square");
    if (k < 0) throw std::invalid_argument("RationalMatrix: negative power");
    RationalMatrix r = identity(rows_);
    RationalMatrix b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RationalMatrix: inverse of non-square");
    const int n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::invalid_argument("RationalMatrix: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational p = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= p;
            inv.at(col, j) *= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool RationalMatrix::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool RationalMatrix::is_upper_triangular() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < i && j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

bool RationalMatrix::is_upper_unipotent() const {
    if (rows_ != cols_ || !is_upper_triangular()) return false;
    for (int i = 0; i < rows_; ++i)
        if (!at(i, i).is_one()) return false;
    return true;
}

std::vector<Rational> RationalMatrix::diagonal_entries() const {
    std::vector<Rational> d;
    for (int i = 0; i < rows_ && i < cols_; ++i) d.push_back(at(i, i));
    return d;
}

int RationalMatrix::rank() const {
    // Clear denominators per row, then Bareiss fraction-free elimination.
    std::vector<std::vector<mpz_class>> m(static_cast<size_t>(rows_),
                                          std::vector<mpz_class>(static_cast<size_t>(cols_)));
    for (int i = 0; i < rows_; ++i) {
        mpz_class lcm_den = 1;
        for (int j = 0; j < cols_; ++j) {
            mpz_class d = at(i, j).den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
            lcm_den = lcm_den / g * d;
        }
        for (int j = 0; j < cols_; ++j)
            m[i][j] = at(i, j).num() * (lcm_den / at(i, j).den());
    }

    int rank = 0;
    mpz_class prev_pivot = 1;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        for (int r = row + 1; r < rows_; ++r) {
            for (int c = col + 1; c < cols_; ++c)
                m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev_pivot;
            m[r][col] = 0;
        }
        prev_pivot = m[row][col];
        ++rank;
        ++row;
    }
    return rank;
}

std::string RationalMatrix::str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += at(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y) {
    return x * y - y * x;
}

} // namespace cva
