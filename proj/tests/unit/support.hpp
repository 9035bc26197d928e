#pragma once

#include <eulerop/rational.hpp>

#include <cstdint>
#include <random>

namespace testing_support {

/// Reproducible random rationals p/q with |p| ≤ maxNum, 1 ≤ q ≤ maxDen.
class RationalGen {
   public:
    explicit RationalGen(std::uint32_t seed) : gen_(seed) {}

    eulerop::Rational next(long maxNum, long maxDen) {
        long p = uniform(-maxNum, maxNum);
        long q = uniform(1, maxDen);
        return eulerop::make_rational(p, q);
    }

    long uniform(long lo, long hi) {
        // raw engine output keeps the sequence identical across standard libraries
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t r = (static_cast<std::uint64_t>(gen_()) << 32) | gen_();
        return lo + static_cast<long>(r % span);
    }

   private:
    std::mt19937 gen_;
};

}  // namespace testing_support
