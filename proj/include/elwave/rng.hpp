// Counter-based random numbers: every draw is a pure function of
// (seed, counter), so streams can be split across threads and replayed
// exactly regardless of scheduling.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace elwave::rng {

/** SplitMix64 output function: a high-quality 64-bit mixer. */
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/** Combines a seed with a stream index into an independent sub-seed. */
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ull));
}

/** Stateless generator: draw k is mix64(seed + k * golden ratio). */
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter) const {
        return mix64(seed_ + counter * 0x9E3779B97F4A7C15ull);
    }

    /** Uniform draw in the half-open interval (0, 1]: safe for log(). */
    double uniform_pos(std::uint64_t counter) const {
        // 53 random bits; +1 shifts the range from [0,1) to (0,1].
        return static_cast<double>((bits(counter) >> 11) + 1) * 0x1.0p-53;
    }

    /** Standard normal pair via Box-Muller from two counter slots. */
    std::array<double, 2> normal_pair(std::uint64_t counter) const {
        const double u1 = uniform_pos(counter);
        const double u2 = uniform_pos(counter + 1);
        const double rad = std::sqrt(-2.0 * std::log(u1));
        const double ang = 6.283185307179586476925286766559 * u2;
        return {rad * std::cos(ang), rad * std::sin(ang)};
    }

  private:
    std::uint64_t seed_;
};

/** Uniform points on the unit sphere in dimension n >= 1.
 *  Each sample consumes a fixed number of counter slots, so sample i is
 *  reproducible in isolation. */
class SphereSampler {
  public:
    SphereSampler(int dim, std::uint64_t seed) : dim_(dim), rng_(seed) {}

    /** Counter slots consumed per sample (pairs of normals). */
    std::uint64_t slots_per_sample() const {
        return 2 * static_cast<std::uint64_t>((dim_ + 1) / 2);
    }

    /** Writes the i-th sample into omega[0..dim). */
    void sample(std::uint64_t index, double* omega) const {
        const std::uint64_t base = index * slots_per_sample();
        double norm2 = 0.0;
        for (int c = 0; c < dim_; c += 2) {
            const auto pair = rng_.normal_pair(base + c);
            omega[c] = pair[0];
            if (c + 1 < dim_) omega[c + 1] = pair[1];
        }
        for (int c = 0; c < dim_; ++c) norm2 += omega[c] * omega[c];
        // A fresh Gaussian vector is zero with probability 0; guard anyway.
        if (norm2 == 0.0) {
            omega[0] = 1.0;
            for (int c = 1; c < dim_; ++c) omega[c] = 0.0;
            return;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (int c = 0; c < dim_; ++c) omega[c] *= inv;
    }

  private:
    int dim_;
    CounterRng rng_;
};

} // namespace elwave::rng
