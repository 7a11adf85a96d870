#include "embgo/evaluator.hpp"

#include <string>

#include "embgo/error.hpp"
#include "embgo/stats.hpp"

namespace embgo {

Evaluator::Evaluator(const Problem& problem, const OptimizerConfig& config, const RunHooks& hooks)
    : problem_(problem), hooks_(hooks), budget_(config.max_fes), record_diversity_(config.record_diversity)
{
    result_.seed = config.seed;
}

double Evaluator::evaluate(std::span<const double> position)
{
    if (exhausted())
        throw Error(ErrorKind::InvalidConfiguration, "evaluation budget of " + std::to_string(budget_) + " exhausted");
    const double f = problem_.evaluate(position);
    ++used_;
    if (!best_.fitness || f < *best_.fitness) {
        best_.position.assign(position.begin(), position.end());
        best_.fitness = f;
    }
    if (hooks_.on_evaluation)
        hooks_.on_evaluation(position, f);
    return f;
}

void Evaluator::note(Operator op) const
{
    if (hooks_.on_operator)
        hooks_.on_operator(op);
}

void Evaluator::checkpoint(std::size_t iteration, const Population& pop)
{
    result_.trace.push_back({used_, best_.fitness.value()});
    if (record_diversity_)
        result_.diversity_trace.push_back({iteration, population_diversity(pop, problem_.bounds())});
    if (hooks_.on_iteration)
        hooks_.on_iteration(iteration, used_, pop);
}

RunResult Evaluator::finish()
{
    result_.best = best_;
    result_.fes_used = used_;
    return std::move(result_);
}

} // namespace embgo
