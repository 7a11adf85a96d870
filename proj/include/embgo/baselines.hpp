#pragma once

#include "embgo/core.hpp"
#include "embgo/evaluator.hpp"
#include "embgo/problem.hpp"
#include "embgo/random.hpp"

namespace embgo {

struct DeParams {
    double F = 0.8;
    double Cr = 0.9;

    void validate() const;
};

struct PsoParams {
    double w = 1.0;
    double c1 = 2.05;
    double c2 = 2.05;
    double v_max = 2.0; // velocities are clamped to [-v_max, v_max]

    void validate() const;
};

/// DE/cur-to-rand/1 mutant X_i + F (X_r1 - X_i) + F (X_r2 - X_r3).
Vector de_mutant(std::span<const double> x_i, std::span<const double> x_r1, std::span<const double> x_r2,
                 std::span<const double> x_r3, double F);

/// Binomial crossover: gene j comes from the mutant when j == forced or
/// uniform() < Cr, otherwise from the parent. One uniform draw per gene.
Vector binomial_crossover(std::span<const double> parent, std::span<const double> mutant, double Cr,
                          std::size_t forced, Random& rng);

/// Differential evolution, DE/cur-to-rand/1/bin with greedy replacement. Needs N >= 4.
RunResult run_de(const Problem& problem, const OptimizerConfig& config, Random& rng, const DeParams& params = {},
                 const RunHooks& hooks = {});
RunResult run_de(const Problem& problem, const OptimizerConfig& config, const DeParams& params = {},
                 const RunHooks& hooks = {});

/// Global-best PSO with zero initial velocities.
RunResult run_pso(const Problem& problem, const OptimizerConfig& config, Random& rng, const PsoParams& params = {},
                  const RunHooks& hooks = {});
RunResult run_pso(const Problem& problem, const OptimizerConfig& config, const PsoParams& params = {},
                  const RunHooks& hooks = {});

/// i.i.d. uniform sampling of the box, in batches of pop_size per checkpoint.
RunResult run_random_search(const Problem& problem, const OptimizerConfig& config, Random& rng,
                            const RunHooks& hooks = {});
RunResult run_random_search(const Problem& problem, const OptimizerConfig& config, const RunHooks& hooks = {});

} // namespace embgo
