#pragma once

#include <cstdint>
#include <string>

#include "spencer/liealg.hpp"

namespace spencer {

/// splitmix64; fixed algorithm so seeded runs are reproducible across
/// platforms (std::uniform_int_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Integer-coordinate dual functional with entries in [-3, 3].
    DualFunctional lambda(std::size_t dim) {
        DualFunctional out = DualFunctional::zero(dim);
        for (auto& c : out.coords) c = GaussianRational(int_in(-3, 3));
        return out;
    }

    /// As above but never the zero functional.
    DualFunctional nonzero_lambda(std::size_t dim) {
        for (;;) {
            DualFunctional out = lambda(dim);
            if (!out.is_zero()) return out;
        }
    }

    /// Small Gaussian rational: numerators in [-3, 3], denominators in {1, 2, 3}.
    GaussianRational scalar(bool allow_imaginary = true) {
        Rational re = Rational(int_in(-3, 3)) / Rational(int_in(1, 3));
        Rational im = allow_imaginary ? Rational(int_in(-3, 3)) / Rational(int_in(1, 3)) : Rational(0);
        return {re, im};
    }

private:
    std::uint64_t state_;
};

/// Stable 64-bit FNV-1a hash for deriving per-claim sub-seeds from the
/// master seed; claims stay reproducible regardless of suite filtering.
inline std::uint64_t stable_hash(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace spencer
