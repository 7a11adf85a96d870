#pragma once

#include <span>

#include "embgo/core.hpp"
#include "embgo/evaluator.hpp"
#include "embgo/levy.hpp"
#include "embgo/mbgo.hpp"
#include "embgo/problem.hpp"
#include "embgo/random.hpp"

namespace embgo {

struct EmbgoParams {
    double delta_low = 0.8;
    double delta_high = 1.2;
    double beta = 1.5;
    // When set, both difference terms of the mutation share one sine
    // coefficient instead of drawing two independent ones.
    bool shared_mutation_coefficient = false;

    void validate() const;
};

/// X_i + (X_best - X_i) sin(2 pi r1) + (X_mean - X_i) sin(2 pi r2).
/// With `shared_coefficient` a single r is drawn and used for both terms.
Vector diff_mutation(const Individual& x_i, const Individual& x_best, std::span<const double> x_mean, Random& rng,
                     bool shared_coefficient = false);

/// X_i + Lévy step (no step-size multiplier).
Vector levy_move(const Individual& x_i, const LevyParams& levy, Random& rng);

/// Merged-phase optimizer: each individual flips a fair coin between the
/// movement branch (mutation or Lévy flight) and the battle branch, one
/// evaluation per individual per iteration.
RunResult run_embgo(const Problem& problem, const OptimizerConfig& config, Random& rng,
                    const EmbgoParams& params = {}, const RunHooks& hooks = {});
RunResult run_embgo(const Problem& problem, const OptimizerConfig& config, const EmbgoParams& params = {},
                    const RunHooks& hooks = {});

} // namespace embgo
