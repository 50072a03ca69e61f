#include "cva/permlab.hpp"

#include <algorithm>
#include <stdexcept>

namespace cva {

Permutation::Permutation(std::vector<int> one_line) : line_(std::move(one_line)) {
    const int n = static_cast<int>(line_.size());
    if (n == 0) throw std::invalid_argument("Permutation: empty");
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : line_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: not a bijection");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> l(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) l[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(l));
}

Permutation Permutation::longest(int n) {
    std::vector<int> l(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) l[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(l));
}

Permutation Permutation::parse(const std::string& s) {
    std::vector<int> l;
    if (s.find(',') == std::string::npos) {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("Permutation: bad digit string");
            l.push_back(c - '0');
        }
    } else {
        size_t pos = 0;
        while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            l.push_back(std::stoi(s.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    }
    return Permutation(std::move(l));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(line_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>(line_[i - 1] - 1)] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::conjugate_by_w0() const {
    const int n = size();
    std::vector<int> l(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) l[static_cast<size_t>(i - 1)] = n + 1 - line_[static_cast<size_t>(n - i)];
    return Permutation(std::move(l));
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (line_[static_cast<size_t>(i)] > line_[static_cast<size_t>(j)]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation Permutation::star(const Permutation& rho) const {
    std::vector<int> l = line_;
    for (int v : rho.line_) l.push_back(size() + v);
    return Permutation(std::move(l));
}

std::string Permutation::str() const {
    std::string s;
    if (size() <= 9) {
        for (int v : line_) s += static_cast<char>('0' + v);
    } else {
        for (size_t i = 0; i < line_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(line_[i]);
        }
    }
    return s;
}

PartialPerm::PartialPerm(int n, std::vector<int> row_cols) : n_(n), rc_(std::move(row_cols)) {
    if (static_cast<int>(rc_.size()) != n) throw std::invalid_argument("PartialPerm: size mismatch");
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (int c : rc_) {
        if (c < 0 || c > n) throw std::invalid_argument("PartialPerm: column out of range");
        if (c > 0) {
            if (used[static_cast<size_t>(c)])
                throw std::invalid_argument("PartialPerm: duplicate column");
            used[static_cast<size_t>(c)] = true;
        }
    }
}

PartialPerm::PartialPerm(const Permutation& pi) : n_(pi.size()), rc_(pi.one_line()) {}

int PartialPerm::rank() const {
    int r = 0;
    for (int c : rc_)
        if (c > 0) ++r;
    return r;
}

Permutation PartialPerm::as_permutation() const {
    if (!is_permutation()) throw std::logic_error("PartialPerm: not a permutation");
    return Permutation(rc_);
}

std::string PartialPerm::str() const {
    std::string s;
    for (int c : rc_) s += static_cast<char>('0' + c);
    return s;
}

int orbit_dimension(const PartialPerm& p) {
    const int n = p.size();
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            bool hit = p.has_one(i, j);
            for (int k = i + 1; k <= n && !hit; ++k) hit = p.has_one(k, j); // directly below
            for (int k = 1; k < j && !hit; ++k) hit = p.has_one(i, k);      // directly left
            if (hit) ++count;
        }
    }
    return count;
}

int stratum_dimension(const PartialPerm& p) { return p.size() * p.size() + p.rank(); }

int fiber_dimension(const PartialPerm& p) {
    const int n = p.size();
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            bool blocked = false;
            for (int k = i + 1; k <= n && !blocked; ++k) blocked = p.has_one(k, j);
            for (int k = 1; k < j && !blocked; ++k) blocked = p.has_one(i, k);
            if (!blocked) ++count;
        }
    }
    return count;
}

int southwest_rank(const Permutation& pi, int i, int j) {
    const int n = pi.size();
    int r = 0;
    for (int k = n - i + 1; k <= n; ++k)
        if (pi(k) <= j) ++r;
    return r;
}

bool bruhat_leq(const Permutation& rho, const Permutation& pi) {
    if (rho.size() != pi.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    const int n = rho.size();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (southwest_rank(rho, i, j) > southwest_rank(pi, i, j)) return false;
    return true;
}

std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<int> l(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) l[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(l));
    } while (std::next_permutation(l.begin(), l.end()));
    return out;
}

std::vector<PartialPerm> enumerate_partial_perms(int n) {
    if (n > 6) throw std::invalid_argument("enumerate_partial_perms: n too large");
    std::vector<PartialPerm> out;
    std::vector<int> rc(static_cast<size_t>(n), 0);
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    // Lexicographic over the row-column code, 0 meaning an empty row.
    auto rec = [&](auto&& self, int row) -> void {
        if (row == n) {
            out.push_back(PartialPerm(n, rc));
            return;
        }
        for (int c = 0; c <= n; ++c) {
            if (c > 0 && used[static_cast<size_t>(c)]) continue;
            rc[static_cast<size_t>(row)] = c;
            if (c > 0) used[static_cast<size_t>(c)] = true;
            self(self, row + 1);
            if (c > 0) used[static_cast<size_t>(c)] = false;
        }
        rc[static_cast<size_t>(row)] = 0;
    };
    rec(rec, 0);
    return out;
}

} // namespace cva
