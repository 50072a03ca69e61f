#include "cva/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cva {

namespace {

void require_same_ring(const Polynomial& p, const Polynomial& q) {
    if (!p.ring() || !q.ring() || !p.ring()->same_as(*q.ring()))
        throw std::invalid_argument("Polynomial: ring mismatch");
}

} // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    if (!ring_) throw std::invalid_argument("Polynomial: null ring");
    normalize();
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& s, const Term& t) {
        return cmp_grevlex(s.mono, t.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    if (c.is_zero()) return zero(std::move(ring));
    Monomial m = Monomial::one(*ring);
    std::vector<Term> ts{{c, std::move(m)}};
    return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::variable(RingPtr ring, int v) {
    Monomial m = Monomial::var(*ring, v);
    std::vector<Term> ts{{Rational(1), std::move(m)}};
    return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::monomial(RingPtr ring, const Rational& c, Monomial m) {
    if (c.is_zero()) return zero(std::move(ring));
    std::vector<Term> ts{{c, std::move(m)}};
    return Polynomial(std::move(ring), std::move(ts));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("Polynomial: leading term of zero");
    return terms_.front();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(*this, o);
    // Merge of two descending term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp_grevlex(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({s, terms_[i].mono});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(*this, o);
    Polynomial acc(ring_);
    for (const auto& t : o.terms_) acc = acc + times_monomial(t.coeff, t.mono);
    return acc;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_monomial(const Rational& c, const Monomial& m) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono.mul(*ring_, m)});
    // Multiplication by a fixed monomial preserves the grevlex ordering.
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

bool Polynomial::is_bihomogeneous() const {
    if (terms_.empty()) return true;
    Bidegree d = terms_.front().mono.bidegree();
    for (const auto& t : terms_)
        if (!(t.mono.bidegree() == d)) return false;
    return true;
}

Bidegree Polynomial::bidegree() const {
    if (terms_.empty()) throw std::logic_error("Polynomial: bidegree of zero");
    if (!is_bihomogeneous()) throw std::logic_error("Polynomial: not bihomogeneous");
    return terms_.front().mono.bidegree();
}

Polynomial Polynomial::derivative(int v) const {
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        int e = t.mono.exponent(v);
        if (e == 0) continue;
        auto exps = t.mono.exponents_vec();
        exps[static_cast<size_t>(v)] = static_cast<uint8_t>(e - 1);
        r.terms_.push_back({t.coeff * Rational(e), Monomial(*ring_, exps)});
    }
    r.normalize();
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
    if (static_cast<int>(values.size()) != ring_->num_vars())
        throw std::invalid_argument("Polynomial: evaluation point size mismatch");
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational prod = t.coeff;
        for (int v = 0; v < ring_->num_vars(); ++v) {
            int e = t.mono.exponent(v);
            if (e) prod *= values[v].pow(static_cast<unsigned>(e));
        }
        acc += prod;
    }
    return acc;
}

Polynomial Polynomial::map_variables(RingPtr target, const std::vector<int>& image) const {
    if (static_cast<int>(image.size()) != ring_->num_vars())
        throw std::invalid_argument("Polynomial: variable image size mismatch");
    Polynomial r(target);
    for (const auto& t : terms_) {
        std::vector<uint8_t> e(target->num_vars(), 0);
        for (int v = 0; v < ring_->num_vars(); ++v) {
            int ev = t.mono.exponent(v);
            if (!ev) continue;
            int img = image[v];
            unsigned s = unsigned(e.at(img)) + unsigned(ev);
            if (s > 255) throw std::overflow_error("Polynomial: exponent overflow in remap");
            e[img] = static_cast<uint8_t>(s);
        }
        r.terms_.push_back({t.coeff, Monomial(*target, std::move(e))});
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::substitute(int v, const Rational& value) const {
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        int e = t.mono.exponent(v);
        if (e == 0) {
            r.terms_.push_back(t);
            continue;
        }
        Rational c = t.coeff * value.pow(static_cast<unsigned>(e));
        if (c.is_zero()) continue;
        auto exps = t.mono.exponents_vec();
        exps[static_cast<size_t>(v)] = 0;
        r.terms_.push_back({c, Monomial(*ring_, exps)});
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::drop_variable(RingPtr target, int v) const {
    if (target->num_vars() != ring_->num_vars() - 1)
        throw std::invalid_argument("Polynomial: drop_variable ring size mismatch");
    Polynomial r(target);
    for (const auto& t : terms_) {
        if (t.mono.exponent(v) != 0)
            throw std::logic_error("Polynomial: drop_variable with live variable");
        std::vector<uint8_t> e;
        e.reserve(target->num_vars());
        for (int u = 0; u < ring_->num_vars(); ++u)
            if (u != v) e.push_back(static_cast<uint8_t>(t.mono.exponent(u)));
        r.terms_.push_back({t.coeff, Monomial(*target, std::move(e))});
    }
    r.normalize();
    return r;
}

long Polynomial::min_weight(const WeightVector& w) const {
    if (terms_.empty()) throw std::invalid_argument("Polynomial: weight of zero polynomial");
    long m = terms_.front().mono.weight(w);
    for (const auto& t : terms_) m = std::min(m, t.mono.weight(w));
    return m;
}

long Polynomial::max_weight(const WeightVector& w) const {
    if (terms_.empty()) throw std::invalid_argument("Polynomial: weight of zero polynomial");
    long m = terms_.front().mono.weight(w);
    for (const auto& t : terms_) m = std::max(m, t.mono.weight(w));
    return m;
}

Polynomial Polynomial::weight_initial_form(const WeightVector& w) const {
    if (terms_.empty())
        throw std::invalid_argument("weight_initial_form: zero polynomial");
    long m = min_weight(w);
    Polynomial r(ring_);
    for (const auto& t : terms_)
        if (t.mono.weight(w) == m) r.terms_.push_back(t);
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = c.abs();
        std::string vars;
        for (int v = 0; v < ring_->num_vars(); ++v) {
            int e = t.mono.exponent(v);
            if (!e) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_->name(v);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += vars;
        } else {
            out += mag.str() + "*" + vars;
        }
    }
    return out;
}

namespace {

// Splits "c*Name^e*Name..." into factors at '*' that are not inside brackets.
std::vector<std::string> split_factors(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == '*' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

Polynomial Polynomial::parse(RingPtr ring, const std::string& text) {
    std::string s = text;
    if (s == "0") return zero(ring);
    // Tokenize into signed term strings.
    std::vector<std::pair<int, std::string>> parts; // (sign, body)
    size_t pos = 0;
    int sign = 1;
    if (!s.empty() && s[0] == '-') {
        sign = -1;
        pos = 1;
    }
    std::string body;
    while (pos < s.size()) {
        if (pos + 2 < s.size() && s[pos] == ' ' && (s[pos + 1] == '+' || s[pos + 1] == '-') &&
            s[pos + 2] == ' ') {
            parts.emplace_back(sign, body);
            body.clear();
            sign = s[pos + 1] == '+' ? 1 : -1;
            pos += 3;
        } else {
            body += s[pos++];
        }
    }
    parts.emplace_back(sign, body);

    std::vector<Term> terms;
    for (auto& [sg, tb] : parts) {
        if (tb.empty()) throw std::invalid_argument("Polynomial::parse: empty term");
        Rational coeff(sg);
        std::vector<uint8_t> exps(ring->num_vars(), 0);
        for (const auto& f : split_factors(tb)) {
            if (f.empty()) throw std::invalid_argument("Polynomial::parse: empty factor");
            if ((f[0] >= '0' && f[0] <= '9')) {
                coeff *= Rational::parse(f);
                continue;
            }
            std::string name = f;
            int e = 1;
            auto caret = f.rfind('^');
            if (caret != std::string::npos && f.find(']', caret) == std::string::npos) {
                name = f.substr(0, caret);
                e = std::stoi(f.substr(caret + 1));
            }
            int v = ring->find(name);
            if (v < 0) throw std::invalid_argument("Polynomial::parse: unknown variable " + name);
            exps[v] = static_cast<uint8_t>(exps[v] + e);
        }
        terms.push_back({coeff, Monomial(*ring, std::move(exps))});
    }
    return Polynomial(ring, std::move(terms));
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op) {
    switch (op) {
    case PolyOp::Add: return p + q;
    case PolyOp::Sub: return p - q;
    case PolyOp::Mul: return p * q;
    }
    throw std::logic_error("poly_arith: bad op");
}

} // namespace cva
