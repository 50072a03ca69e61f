#include "cva/monomial.hpp"

namespace cva {

int cmp_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    // Equal degree: the last variable where the exponents differ decides;
    // the smaller exponent there wins.
    std::span<const uint8_t> ea = a.exponents();
    std::span<const uint8_t> eb = b.exponents();
    for (int v = static_cast<int>(ea.size()) - 1; v >= 0; --v) {
        if (ea[v] != eb[v]) return ea[v] < eb[v] ? 1 : -1;
    }
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
    std::span<const uint8_t> ea = a.exponents();
    std::span<const uint8_t> eb = b.exponents();
    for (size_t v = 0; v < ea.size(); ++v) {
        if (ea[v] != eb[v]) return ea[v] > eb[v] ? 1 : -1;
    }
    return 0;
}

std::string TermOrder::describe() const {
    switch (kind) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Weighted: {
        std::string s = "weighted[";
        for (size_t i = 0; i < weight.w.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(weight.w[i]);
        }
        return s + "]";
    }
    }
    return "?";
}

} // namespace cva
