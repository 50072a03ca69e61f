#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "cva/ring.hpp"

namespace cva {

/// Exponent vector over a ring's variables, with cached bidegree and a
/// support bitmask for fast divisibility rejection. Exponents live inline
/// (rings are capped at 64 variables), so monomials never touch the heap
/// and term streams stay cache-local. Exponents are bounded by 255, far
/// beyond anything the schemes here produce.
class Monomial {
public:
    Monomial() = default;
    Monomial(const Ring& ring, std::span<const uint8_t> exps) {
        if (static_cast<int>(exps.size()) != ring.num_vars())
            throw std::invalid_argument("Monomial: exponent count mismatch");
        nv_ = static_cast<uint8_t>(exps.size());
        std::copy(exps.begin(), exps.end(), e_.begin());
        recache(ring);
    }
    Monomial(const Ring& ring, const std::vector<uint8_t>& exps)
        : Monomial(ring, std::span<const uint8_t>(exps)) {}

    static Monomial one(const Ring& ring) {
        Monomial m;
        m.nv_ = static_cast<uint8_t>(ring.num_vars());
        return m;
    }
    static Monomial var(const Ring& ring, int v, int exp = 1) {
        Monomial m = one(ring);
        m.e_.at(static_cast<size_t>(v)) = static_cast<uint8_t>(exp);
        m.recache(ring);
        return m;
    }

    int num_vars() const { return nv_; }
    int exponent(int v) const { return e_[static_cast<size_t>(v)]; }
    int degree() const { return deg_; }
    int dega() const { return dega_; }
    int degb() const { return degb_; }
    Bidegree bidegree() const { return {dega_, degb_}; }
    uint64_t support_mask() const { return mask_; }
    bool is_one() const { return mask_ == 0; }

    std::span<const uint8_t> exponents() const { return {e_.data(), nv_}; }
    std::vector<uint8_t> exponents_vec() const {
        return std::vector<uint8_t>(e_.data(), e_.data() + nv_);
    }

    bool operator==(const Monomial& o) const {
        return mask_ == o.mask_ && nv_ == o.nv_ &&
               std::equal(e_.data(), e_.data() + nv_, o.e_.data());
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    bool divides(const Monomial& o) const {
        if ((mask_ & ~o.mask_) != 0) return false;
        for (int v = 0; v < nv_; ++v)
            if (e_[static_cast<size_t>(v)] > o.e_[static_cast<size_t>(v)]) return false;
        return true;
    }

    Monomial mul(const Ring& ring, const Monomial& o) const {
        Monomial r;
        r.nv_ = nv_;
        for (int v = 0; v < nv_; ++v) {
            unsigned s = unsigned(e_[static_cast<size_t>(v)]) + unsigned(o.e_[static_cast<size_t>(v)]);
            if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
            r.e_[static_cast<size_t>(v)] = static_cast<uint8_t>(s);
        }
        r.mask_ = mask_ | o.mask_;
        r.deg_ = static_cast<int16_t>(deg_ + o.deg_);
        r.dega_ = static_cast<int16_t>(dega_ + o.dega_);
        r.degb_ = static_cast<int16_t>(degb_ + o.degb_);
        (void)ring;
        return r;
    }

    /// this / o; requires o.divides(*this).
    Monomial div(const Ring& ring, const Monomial& o) const {
        Monomial r;
        r.nv_ = nv_;
        for (int v = 0; v < nv_; ++v) {
            if (o.e_[static_cast<size_t>(v)] > e_[static_cast<size_t>(v)])
                throw std::invalid_argument("Monomial: non-divisible quotient");
            r.e_[static_cast<size_t>(v)] =
                static_cast<uint8_t>(e_[static_cast<size_t>(v)] - o.e_[static_cast<size_t>(v)]);
        }
        r.recache(ring);
        return r;
    }

    Monomial lcm(const Ring& ring, const Monomial& o) const {
        Monomial r;
        r.nv_ = nv_;
        for (int v = 0; v < nv_; ++v)
            r.e_[static_cast<size_t>(v)] =
                std::max(e_[static_cast<size_t>(v)], o.e_[static_cast<size_t>(v)]);
        r.recache(ring);
        return r;
    }

    bool coprime(const Monomial& o) const {
        if ((mask_ & o.mask_) != 0) {
            for (int v = 0; v < nv_; ++v)
                if (e_[static_cast<size_t>(v)] && o.e_[static_cast<size_t>(v)]) return false;
        }
        return true;
    }

    long weight(const WeightVector& w) const {
        long s = 0;
        for (int v = 0; v < nv_; ++v)
            if (e_[static_cast<size_t>(v)]) s += w.w[static_cast<size_t>(v)] * long(e_[static_cast<size_t>(v)]);
        return s;
    }

private:
    void recache(const Ring& ring) {
        deg_ = 0; dega_ = 0; degb_ = 0; mask_ = 0;
        for (int v = 0; v < nv_; ++v) {
            uint8_t e = e_[static_cast<size_t>(v)];
            if (!e) continue;
            mask_ |= (uint64_t{1} << v);
            deg_ = static_cast<int16_t>(deg_ + e);
            Bidegree d = ring.var_bidegree(v);
            dega_ = static_cast<int16_t>(dega_ + d.a * e);
            degb_ = static_cast<int16_t>(degb_ + d.b * e);
        }
    }

    std::array<uint8_t, 64> e_{};
    uint8_t nv_ = 0;
    int16_t deg_ = 0;
    int16_t dega_ = 0;
    int16_t degb_ = 0;
    uint64_t mask_ = 0;
};

/// Graded reverse lexicographic comparison with the ring enumeration as
/// priority. Returns +1 if a > b, 0 if equal, -1 if a < b.
int cmp_grevlex(const Monomial& a, const Monomial& b);

/// Pure lexicographic comparison (first variable strongest).
int cmp_lex(const Monomial& a, const Monomial& b);

/// Global monomial order. The weighted kind compares the w-weight first with
/// the *min*-weight monomial largest (so leading terms pick out min-weight
/// initial forms), ties broken by grevlex. A min-first weight order is not
/// global in general; it is total and multiplicative, and on ideals with
/// homogeneous generators every division and Buchberger run stays inside
/// finitely many graded pieces, where total orders are well-orders. The
/// groebner module enforces that restriction.
struct TermOrder {
    enum class Kind { Lex, Grevlex, Weighted };

    Kind kind = Kind::Grevlex;
    WeightVector weight; // Weighted only

    static TermOrder lex() { return {Kind::Lex, {}}; }
    static TermOrder grevlex() { return {Kind::Grevlex, {}}; }
    static TermOrder weighted(WeightVector w) { return {Kind::Weighted, std::move(w)}; }

    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
        case Kind::Lex: return cmp_lex(a, b);
        case Kind::Grevlex: return cmp_grevlex(a, b);
        case Kind::Weighted: {
            long wa = a.weight(weight), wb = b.weight(weight);
            if (wa != wb) return wa < wb ? 1 : -1;
            return cmp_grevlex(a, b);
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    std::string describe() const;
};

} // namespace cva
