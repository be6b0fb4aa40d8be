#pragma once

#include "gptlab/rational.hpp"

#include <cstdint>
#include <random>

namespace gptlab {

/// Seeded 64-bit PRNG. Draws avoid std::uniform_int_distribution so that
/// sequences are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

    long int_in(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Positive rational weight with numerator in [1, 2^16].
    Rational weight() { return Rational(1 + static_cast<long>(below(1u << 16))); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace gptlab
