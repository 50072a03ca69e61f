#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cva {

struct Bidegree {
    int a = 0; // X-degree
    int b = 0; // Y-degree
    bool operator==(const Bidegree&) const = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class VarFamily { X, Y };

/// Variable of a matrix ring: one of X[row][col], Y[row][col] (1-based).
struct VariableId {
    VarFamily family;
    int row;
    int col;
};

/// Immutable variable universe: a fixed enumeration of named variables with
/// a bigrading. The enumeration doubles as the priority used by term-order
/// tie-breaks, so fixing it makes reduced bases canonical.
///
/// Matrix rings hold the 2n^2 entries of two generic matrices, enumerated
/// X[1][1],...,X[1][n],...,X[n][n],Y[1][1],...,Y[n][n], with X variables of
/// bidegree (1,0) and Y variables of bidegree (0,1).
class Ring {
public:
    static RingPtr matrices(int n);
    static RingPtr custom(std::vector<std::string> names, std::vector<Bidegree> degs);

    /// Same ring with one extra variable "h" of bidegree (0,0) appended.
    RingPtr with_homogenizer() const;

    int num_vars() const { return static_cast<int>(names_.size()); }
    int matrix_size() const { return n_; }
    const std::string& name(int v) const { return names_[v]; }
    Bidegree var_bidegree(int v) const { return degs_[v]; }
    const std::vector<Bidegree>& bidegrees() const { return degs_; }

    bool has_homogenizer() const { return hvar_ >= 0; }
    int homogenizer() const { return hvar_; }

    int xvar(int i, int j) const { check_matrix(i, j); return (i - 1) * n_ + (j - 1); }
    int yvar(int i, int j) const { check_matrix(i, j); return n_ * n_ + (i - 1) * n_ + (j - 1); }
    int index_of(const VariableId& v) const {
        return v.family == VarFamily::X ? xvar(v.row, v.col) : yvar(v.row, v.col);
    }

    /// Index of a variable by name, or -1.
    int find(const std::string& name) const;

    bool same_as(const Ring& o) const;

private:
    Ring() = default;
    void check_matrix(int i, int j) const {
        if (n_ < 1 || i < 1 || i > n_ || j < 1 || j > n_)
            throw std::invalid_argument("Ring: matrix index out of range");
    }

    int n_ = 0; // matrix size, 0 for custom rings
    int hvar_ = -1;
    std::vector<std::string> names_;
    std::vector<Bidegree> degs_;
};

/// Integer weight per variable (entries may be negative).
struct WeightVector {
    std::vector<long> w;

    long of_var(int v) const { return w.at(static_cast<size_t>(v)); }
    size_t size() const { return w.size(); }
};

} // namespace cva
