#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "embgo/random.hpp"

namespace embgo {

using Vector = std::vector<double>;

/// Axis-aligned search box. Construction enforces lower[j] < upper[j].
class Bounds {
public:
    Bounds(Vector lower, Vector upper);

    /// The same interval [lo, hi] in every one of `dim` dimensions.
    static Bounds uniform(std::size_t dim, double lo, double hi);

    std::size_t dim() const noexcept { return lower_.size(); }
    const Vector& lower() const noexcept { return lower_; }
    const Vector& upper() const noexcept { return upper_; }
    double width(std::size_t j) const { return upper_[j] - lower_[j]; }
    bool contains(std::span<const double> x) const;

private:
    Vector lower_;
    Vector upper_;
};

struct Individual {
    Vector position;
    std::optional<double> fitness;

    double f() const { return fitness.value(); }
};

using Population = std::vector<Individual>;

struct TracePoint {
    std::size_t fes = 0;
    double best_fitness = 0.0;

    bool operator==(const TracePoint&) const = default;
};

struct DiversityPoint {
    std::size_t iteration = 0;
    double diversity = 0.0;

    bool operator==(const DiversityPoint&) const = default;
};

struct RunResult {
    Individual best;
    std::vector<TracePoint> trace;              // one checkpoint per completed (or truncated) iteration
    std::vector<DiversityPoint> diversity_trace; // empty when diversity recording is off
    std::uint64_t seed = 0;
    std::size_t fes_used = 0;
};

struct OptimizerConfig {
    std::size_t pop_size = 100;
    std::size_t max_fes = 10000;
    std::uint64_t seed = 0;
    bool record_diversity = true;
};

/// N uniform draws in the box; fitness is left unset.
Population init_population(std::size_t n, const Bounds& bounds, Random& rng);

/// Component-wise projection onto the box.
Vector clamp(std::span<const double> position, const Bounds& bounds);
void clamp_in_place(std::span<double> position, const Bounds& bounds);

/// Offspring survives only on strict improvement (minimization).
const Individual& greedy_replace(const Individual& parent, const Individual& offspring);

/// Indices of the minimum- and maximum-fitness members, lowest index on ties.
std::pair<std::size_t, std::size_t> best_worst_index(const Population& pop);
std::pair<Individual, Individual> best_worst(const Population& pop);

/// Arithmetic centroid of the member positions.
Vector centroid(const Population& pop);

double euclidean_distance(std::span<const double> a, std::span<const double> b);

} // namespace embgo
