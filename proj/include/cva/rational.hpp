#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cva {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator; all arithmetic is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}

private:
    // mpq arithmetic keeps canonical operands canonical; results flowing in
    // through this tag skip the redundant re-canonicalization.
    struct canonical_tag {};
    Rational(mpq_class&& q, canonical_tag) : q_(std::move(q)) {}

public:
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }

    /// Parses "n" or "n/d"; throws on malformed input or zero denominator.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(mpz_class(s));
            mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    const mpz_class num() const { return q_.get_num(); }
    const mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_), canonical_tag{}); }
    Rational operator+(const Rational& o) const {
        return Rational(mpq_class(q_ + o.q_), canonical_tag{});
    }
    Rational operator-(const Rational& o) const {
        return Rational(mpq_class(q_ - o.q_), canonical_tag{});
    }
    Rational operator*(const Rational& o) const {
        return Rational(mpq_class(q_ * o.q_), canonical_tag{});
    }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_), canonical_tag{});
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
        return Rational(mpq_class(1 / q_), canonical_tag{});
    }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(unsigned k) const {
        Rational r(1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    /// "num/den", den omitted when 1.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    mpq_class q_;
};

/// Reduced rational with positive denominator; throws on zero denominator.
inline Rational make_rational(long num, long den) { return Rational(num, den); }

} // namespace cva
