#pragma once

#include <cstdint>
#include <random>

#include "qgl2/rational.hpp"

namespace qgl2 {

// Deterministic height-bounded rational sampler shared by the selftest
// command and the property suites. mt19937_64 with explicit distributions
// implemented by rejection keeps the stream identical across platforms.
class RationalSampler {
public:
    RationalSampler(std::uint64_t seed, unsigned height)
        : rng_(seed), height_(height) {}

    // numerator in [-height, height], denominator in [1, height]
    Rational next() {
        const long long num = next_in(2 * height_ + 1) - static_cast<long long>(height_);
        const long long den = next_in(height_) + 1;
        return Rational(num, den);
    }

    Rational next_nonzero() {
        for (;;) {
            Rational r = next();
            if (r != 0) return r;
        }
    }

    std::uint64_t next_raw() { return rng_(); }

private:
    long long next_in(unsigned bound) {  // uniform in [0, bound)
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            const std::uint64_t v = rng_();
            if (v < limit) return static_cast<long long>(v % bound);
        }
    }

    std::mt19937_64 rng_;
    unsigned height_;
};

}  // namespace qgl2
