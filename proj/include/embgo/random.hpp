#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

namespace embgo {

/// Source of the random draws every operator consumes.
///
/// Operators take a Random& so tests can substitute a scripted source and pin
/// r, theta, delta and the Lévy normals to exact values.
class Random {
public:
    virtual ~Random() = default;

    /// Uniform on [0, 1).
    virtual double uniform() = 0;
    /// Standard normal N(0, 1).
    virtual double normal() = 0;
    /// Uniform integer on [0, n). n must be positive.
    virtual std::size_t below(std::size_t n) = 0;

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

/// Platform-stable stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Distributions are implemented here rather than taken from
/// <random>, since libstdc++/libc++/MSVC disagree on those:
///   uniform  = top 53 bits of one engine word, scaled by 2^-53
///   normal   = Box-Muller on two uniforms, second variate cached
///   below(n) = rejection sampling on full 64-bit words
class RngStream final : public Random {
public:
    explicit RngStream(std::uint64_t seed);

    double uniform() override;
    double normal() override;
    std::size_t below(std::size_t n) override;

    std::uint64_t seed() const noexcept { return seed_; }

    using Random::uniform;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

/// Seed of trial `trial` in an experiment with base seed `base`.
constexpr std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) noexcept { return base + trial; }

} // namespace embgo
