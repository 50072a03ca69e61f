#include "cva/schemes.hpp"

#include <algorithm>

namespace cva {

SymbolicMatrix SymbolicMatrix::mul(const SymbolicMatrix& o) const {
    SymbolicMatrix r{n, ring, std::vector<Polynomial>(static_cast<size_t>(n) * n, Polynomial::zero(ring))};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Polynomial acc = Polynomial::zero(ring);
            for (int k = 1; k <= n; ++k) acc = acc + entry(i, k) * o.entry(k, j);
            r.entry(i, j) = std::move(acc);
        }
    return r;
}

SymbolicMatrix SymbolicMatrix::sub(const SymbolicMatrix& o) const {
    SymbolicMatrix r = *this;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r.entry(i, j) = entry(i, j) - o.entry(i, j);
    return r;
}

SymbolicMatrix SymbolicMatrix::transpose() const {
    SymbolicMatrix r = *this;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r.entry(i, j) = entry(j, i);
    return r;
}

Polynomial SymbolicMatrix::det() const {
    if (n == 1) return entry(1, 1);
    // Laplace expansion along the first row; fine at the sizes used here.
    Polynomial acc = Polynomial::zero(ring);
    for (int j = 1; j <= n; ++j) {
        SymbolicMatrix minor{n - 1, ring, {}};
        minor.e.reserve(static_cast<size_t>(n - 1) * (n - 1));
        for (int r = 2; r <= n; ++r)
            for (int c = 1; c <= n; ++c)
                if (c != j) minor.e.push_back(entry(r, c));
        Polynomial term = entry(1, j) * minor.det();
        acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

std::pair<SymbolicMatrix, SymbolicMatrix> generic_matrices(const RingPtr& ring) {
    const int n = ring->matrix_size();
    if (n < 1) throw std::invalid_argument("generic_matrices: not a matrix ring");
    SymbolicMatrix X{n, ring, {}}, Y{n, ring, {}};
    X.e.reserve(static_cast<size_t>(n) * n);
    Y.e.reserve(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) X.e.push_back(Polynomial::variable(ring, ring->xvar(i, j)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) Y.e.push_back(Polynomial::variable(ring, ring->yvar(i, j)));
    return {std::move(X), std::move(Y)};
}

std::pair<SymbolicMatrix, SymbolicMatrix> generic_matrices(int n) {
    return generic_matrices(Ring::matrices(n));
}

std::string SchemeTag::str(int n) const {
    std::string base;
    switch (kind) {
    case Kind::Commuting: base = "commuting"; break;
    case Kind::D: base = "D"; break;
    case Kind::Dz: base = "Dz"; break;
    case Kind::D0: base = "D0"; break;
    case Kind::E: base = "E"; break;
    case Kind::EpiCandidate: base = "Epi"; break;
    case Kind::ClosureUnion: base = "Union"; break;
    }
    std::string s = base + ":n=" + std::to_string(n);
    if (kind == Kind::Dz) s += ":z=" + z.str();
    if (pi) s += ":pi=" + pi->str();
    return s;
}

std::vector<Polynomial> schubert_rank_minors(const SymbolicMatrix& M, const Permutation& pi) {
    const int n = M.n;
    if (pi.size() != n) throw std::invalid_argument("schubert_rank_minors: size mismatch");
    std::vector<Polynomial> out;

    auto emit = [&](const Polynomial& p) {
        if (p.is_zero()) return;
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    };

    // Rectangle of the bottom i rows and first j columns.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int r = southwest_rank(pi, i, j);
            if (r >= std::min(i, j)) continue;
            const int k = r + 1; // minor size
            std::vector<int> rows(static_cast<size_t>(i)), cols(static_cast<size_t>(j));
            for (int a = 0; a < i; ++a) rows[static_cast<size_t>(a)] = n - i + 1 + a;
            for (int b = 0; b < j; ++b) cols[static_cast<size_t>(b)] = 1 + b;

            std::vector<int> rsel(static_cast<size_t>(k)), csel(static_cast<size_t>(k));
            auto choose = [&](auto&& self, std::vector<int>& sel, const std::vector<int>& from,
                              int pos, int start, auto&& done) -> void {
                if (pos == k) {
                    done();
                    return;
                }
                for (int idx = start; idx <= static_cast<int>(from.size()) - (k - pos); ++idx) {
                    sel[static_cast<size_t>(pos)] = from[static_cast<size_t>(idx)];
                    self(self, sel, from, pos + 1, idx + 1, done);
                }
            };
            choose(choose, rsel, rows, 0, 0, [&]() {
                choose(choose, csel, cols, 0, 0, [&]() {
                    SymbolicMatrix sub{k, M.ring, {}};
                    sub.e.reserve(static_cast<size_t>(k) * k);
                    for (int a = 0; a < k; ++a)
                        for (int b = 0; b < k; ++b)
                            sub.e.push_back(M.entry(rsel[static_cast<size_t>(a)], csel[static_cast<size_t>(b)]));
                    emit(sub.det());
                });
            });
        }
    }
    return out;
}

IdealSpec build_ideal(const SchemeTag& tag, int n, Orientation o) {
    if (n < 1) throw std::invalid_argument("build_ideal: n must be >= 1");
    RingPtr ring = Ring::matrices(n);
    auto [X, Y] = generic_matrices(ring);
    SymbolicMatrix XY = X.mul(Y);
    SymbolicMatrix YX = Y.mul(X);

    std::vector<Polynomial> gens;
    auto push = [&](const Polynomial& p) {
        if (p.is_zero()) return;
        if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(p);
    };

    using Kind = SchemeTag::Kind;
    switch (tag.kind) {
    case Kind::Commuting:
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) push(XY.entry(i, j) - YX.entry(i, j));
        break;
    case Kind::D:
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) push(XY.entry(i, j) - YX.entry(i, j));
        break;
    case Kind::Dz: {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                int oij = (o == Orientation::Standard) ? j - i : i - j;
                // (XY)_ij - z^oij (YX)_ij with denominators cleared.
                Rational zx = tag.z.pow(static_cast<unsigned>(std::max(0, -oij)));
                Rational zy = tag.z.pow(static_cast<unsigned>(std::max(0, oij)));
                push(XY.entry(i, j).scaled(zx) - YX.entry(i, j).scaled(zy));
            }
        break;
    }
    case Kind::D0:
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                bool upper = i < j;
                if (o == Orientation::Flipped) upper = !upper;
                push(upper ? XY.entry(i, j) : YX.entry(i, j));
            }
        break;
    case Kind::E:
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j < i; ++j) push(XY.entry(i, j));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j < i; ++j) push(YX.entry(i, j));
        break;
    case Kind::EpiCandidate:
    case Kind::ClosureUnion: {
        if (!tag.pi || tag.pi->size() != n)
            throw std::invalid_argument("build_ideal: permutation required");
        const Permutation& pi = *tag.pi;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j < i; ++j) push(XY.entry(i, j));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j < i; ++j) push(YX.entry(i, j));
        if (tag.kind == Kind::EpiCandidate) {
            for (int i = 1; i <= n; ++i) push(XY.entry(i, i) - YX.entry(pi(i), pi(i)));
        }
        for (const auto& m : schubert_rank_minors(X, pi)) push(m);
        for (const auto& m : schubert_rank_minors(Y, pi.inverse())) push(m);
        break;
    }
    }

    IdealSpec I(ring, std::move(gens), tag.str(n));
    I.require_bihomogeneous();
    return I;
}

IdealSpec tau_substitute(const IdealSpec& I, int n) {
    const Ring& ring = *I.ring;
    if (ring.matrix_size() != n) throw std::invalid_argument("tau_substitute: ring size mismatch");
    std::vector<int> image(static_cast<size_t>(ring.num_vars()));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            image[static_cast<size_t>(ring.xvar(i, j))] = ring.xvar(n + 1 - i, j);
            image[static_cast<size_t>(ring.yvar(i, j))] = ring.yvar(i, n + 1 - j);
        }
    std::vector<Polynomial> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) gens.push_back(g.map_variables(I.ring, image));
    return IdealSpec(I.ring, std::move(gens), "tau(" + I.label + ")");
}

WeightVector degeneration_weight(int n, Orientation o) {
    RingPtr ring = Ring::matrices(n);
    WeightVector w;
    w.w.assign(static_cast<size_t>(ring->num_vars()), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            w.w[static_cast<size_t>(ring->xvar(i, j))] = i - 1;
            w.w[static_cast<size_t>(ring->yvar(i, j))] = -(j - 1);
        }
    if (o == Orientation::Flipped)
        for (auto& x : w.w) x = -x;
    return w;
}

SamplePointParams central_params(Permutation pi, std::vector<Rational> t, std::vector<Rational> s) {
    const int n = pi.size();
    return SamplePointParams{std::move(pi), std::move(t), std::move(s),
                             RationalMatrix::identity(n), RationalMatrix::identity(n)};
}

bool is_generic(const SamplePointParams& p) {
    const size_t n = p.t.size();
    if (p.s.size() != n || static_cast<size_t>(p.pi.size()) != n) return false;
    for (const auto& si : p.s)
        if (si.is_zero()) return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (p.t[i] / p.s[i] == p.t[j] / p.s[j]) return false;
            if (p.s[i] * p.t[i] == p.s[j] * p.t[j]) return false;
        }
    return true;
}

std::pair<RationalMatrix, RationalMatrix> sample_point(const SamplePointParams& p) {
    const int n = p.pi.size();
    if (static_cast<int>(p.t.size()) != n || static_cast<int>(p.s.size()) != n)
        throw std::invalid_argument("sample_point: diagonal size mismatch");
    if (!p.u1.is_upper_unipotent() || !p.u2.is_upper_unipotent())
        throw std::invalid_argument("sample_point: U1, U2 must be strictly-upper unipotent");
    RationalMatrix P = RationalMatrix::permutation(p.pi.one_line());
    RationalMatrix Pinv = RationalMatrix::permutation(p.pi.inverse().one_line());
    RationalMatrix X = p.u1 * P * RationalMatrix::diagonal(p.t) * p.u2.inverse();
    RationalMatrix Y = p.u2 * RationalMatrix::diagonal(p.s) * Pinv * p.u1.inverse();
    return {std::move(X), std::move(Y)};
}

namespace {

std::vector<Rational> point_values(const Ring& ring,
                                   const std::pair<RationalMatrix, RationalMatrix>& pt) {
    const int n = ring.matrix_size();
    if (n < 1 || pt.first.rows() != n || pt.second.rows() != n)
        throw std::invalid_argument("point size mismatch");
    std::vector<Rational> vals(static_cast<size_t>(ring.num_vars()));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            vals[static_cast<size_t>(ring.xvar(i, j))] = pt.first.at(i - 1, j - 1);
            vals[static_cast<size_t>(ring.yvar(i, j))] = pt.second.at(i - 1, j - 1);
        }
    return vals;
}

} // namespace

bool point_on_scheme(const IdealSpec& I, const std::pair<RationalMatrix, RationalMatrix>& point) {
    auto vals = point_values(*I.ring, point);
    for (const auto& g : I.generators)
        if (!g.evaluate(vals).is_zero()) return false;
    return true;
}

int jacobian_rank(const IdealSpec& I, const std::pair<RationalMatrix, RationalMatrix>& point) {
    auto vals = point_values(*I.ring, point);
    for (const auto& g : I.generators)
        if (!g.evaluate(vals).is_zero())
            throw std::invalid_argument("jacobian_rank: point not on scheme " + I.label);
    const int nv = I.ring->num_vars();
    RationalMatrix J(static_cast<int>(I.generators.size()), nv);
    for (size_t r = 0; r < I.generators.size(); ++r)
        for (int v = 0; v < nv; ++v)
            J.at(static_cast<int>(r), v) = I.generators[r].derivative(v).evaluate(vals);
    return J.rank();
}

RationalMatrix power_diagonal_matrix(const RationalMatrix& X, const RationalMatrix& Y) {
    if (X.rows() != X.cols() || Y.rows() != Y.cols() || X.rows() != Y.rows())
        throw std::invalid_argument("power_diagonal_matrix: size mismatch");
    const int n = X.rows();
    RationalMatrix M(n, 2 * n);
    RationalMatrix px = RationalMatrix::identity(n), py = RationalMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            M.at(i, k) = px.at(i, i);
            M.at(i, n + k) = py.at(i, i);
        }
        if (k + 1 < n) {
            px = px * X;
            py = py * Y;
        }
    }
    return M;
}

TaoReport tao_rank_check(const RationalMatrix& X, const RationalMatrix& Y) {
    RationalMatrix K = commutator(X, Y);
    bool applies = K.is_diagonal() && !K.is_zero();
    int rank = power_diagonal_matrix(X, Y).rank();
    return {applies, rank, !applies || rank <= X.rows() - 1};
}

bool diag_lemma_check(const RationalMatrix& X, const RationalMatrix& Y, const Permutation& pi,
                      bool use_inverse) {
    const int n = X.rows();
    if (pi.size() != n) throw std::invalid_argument("diag_lemma_check: size mismatch");
    Permutation p = use_inverse ? pi.inverse() : pi;
    RationalMatrix XY = X * Y;
    RationalMatrix YX = Y * X;
    for (int i = 1; i <= n; ++i)
        if (!(XY.at(i - 1, i - 1) == YX.at(p(i) - 1, p(i) - 1))) return false;
    return true;
}

} // namespace cva
