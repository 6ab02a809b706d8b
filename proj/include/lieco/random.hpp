#pragma once

#include <cstdint>
#include <random>

#include "lieco/matrix.hpp"

namespace lieco {

struct SampleBounds {
    long num = 20;  // |numerator| <= num
    long den = 10;  // 1 <= denominator <= den
};

// mt19937_64 is specified bit-exactly by the standard; the distributions are
// not, so bounded integers are derived from raw engine output here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    long uniform(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(eng_() % span);
    }
    bool coin() { return eng_() & 1u; }

    Scalar rational(const SampleBounds& b = {}) { return Scalar(uniform(-b.num, b.num), uniform(1, b.den)); }
    Scalar nonzero_rational(const SampleBounds& b = {}) {
        for (;;) {
            Scalar s = rational(b);
            if (!s.is_zero()) return s;
        }
    }
    Scalar integer(long bound) { return Scalar(uniform(-bound, bound)); }

    ExactMatrix matrix(std::size_t r, std::size_t c, const SampleBounds& b = {}) {
        ExactMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(b);
        return m;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

// Mixes a base seed with a stream index (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace lieco
