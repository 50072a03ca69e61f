#pragma once

#include <cstdint>
#include <string_view>

#include "cva/rational.hpp"

namespace cva {

/// Splittable deterministic RNG: a splitmix64 stream keyed by
/// (seed, check name, trial index). Per-trial streams are independent of
/// execution order, so parallel runs reproduce serial output byte for byte.
class SplitRng {
public:
    static SplitRng keyed(uint64_t seed, std::string_view check, uint64_t trial) {
        uint64_t h = 1469598103934665603ull; // FNV-1a
        for (char c : check) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        SplitRng r;
        r.state_ = mix(mix(seed ^ h) + trial * 0x9e3779b97f4a7c15ull);
        return r;
    }

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform-ish integer in [lo, hi]; plain modulo reduction keeps the
    /// stream platform-independent, and the tiny bias is irrelevant here.
    long rand_int(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    long rand_nonzero(long lo, long hi) {
        for (;;) {
            long v = rand_int(lo, hi);
            if (v != 0) return v;
        }
    }

    Rational rand_rational_int(long lo, long hi) { return Rational(rand_int(lo, hi)); }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t state_ = 0;
};

} // namespace cva
