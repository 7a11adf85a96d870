#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "embgo/core.hpp"
#include "embgo/problem.hpp"

namespace embgo {

/// Which candidate-construction rule produced an offspring.
enum class Operator {
    SafeZoneInside,  // movement, in the zone (MBGO sine step)
    SafeZoneOutside, // movement, out of the zone (MBGO normal / convex step)
    DiffMutation,    // movement, in the zone (current-to-best&mean)
    LevyFlight,      // movement, out of the zone
    BattleStronger,
    BattleWeaker,
    DeTrial,
    PsoMove,
    RandomSample,
};

/// Optional instrumentation. Unset callbacks cost nothing beyond a branch.
struct RunHooks {
    /// Every objective evaluation, after clamping.
    std::function<void(std::span<const double> position, double fitness)> on_evaluation;
    /// End of every iteration, including a final truncated one.
    std::function<void(std::size_t iteration, std::size_t fes_used, const Population& pop)> on_iteration;
    std::function<void(Operator op)> on_operator;
};

/// FE-budget accountant shared by every optimizer.
///
/// Tracks the best-so-far individual and builds the per-iteration trace, so
/// each algorithm only decides what to evaluate and when to checkpoint.
class Evaluator {
public:
    Evaluator(const Problem& problem, const OptimizerConfig& config, const RunHooks& hooks);

    bool exhausted() const noexcept { return used_ >= budget_; }
    std::size_t used() const noexcept { return used_; }
    std::size_t remaining() const noexcept { return budget_ - used_; }

    /// Evaluates one position. Throws InvalidConfiguration when the budget is spent.
    double evaluate(std::span<const double> position);
    void evaluate(Individual& individual) { individual.fitness = evaluate(individual.position); }

    void note(Operator op) const;

    /// Records (fes, best-so-far) and, if enabled, the population diversity.
    void checkpoint(std::size_t iteration, const Population& pop);

    const Individual& best() const noexcept { return best_; }

    RunResult finish();

private:
    const Problem& problem_;
    const RunHooks& hooks_;
    std::size_t budget_;
    std::size_t used_ = 0;
    bool record_diversity_;
    Individual best_;
    RunResult result_;
};

} // namespace embgo
