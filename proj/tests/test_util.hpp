#pragma once

#include <initializer_list>
#include <vector>

#include "cva/matrixq.hpp"
#include "cva/polynomial.hpp"

namespace cva::testutil {

inline RationalMatrix rm(std::initializer_list<std::initializer_list<long>> rows) {
    RationalMatrix m(static_cast<int>(rows.size()),
                     static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (long v : r) m.at(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

inline std::vector<Rational> qvec(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

/// Ring in variables x (bidegree (1,0)) and y (bidegree (0,1)).
inline RingPtr xy_ring() {
    return Ring::custom({"x", "y"}, {{1, 0}, {0, 1}});
}

/// Three X-graded variables u > v > w.
inline RingPtr uvw_ring() {
    return Ring::custom({"u", "v", "w"}, {{1, 0}, {1, 0}, {1, 0}});
}

} // namespace cva::testutil
