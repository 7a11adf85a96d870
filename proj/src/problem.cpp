#include "embgo/problem.hpp"

#include <limits>

#include "embgo/constrained.hpp"
#include "embgo/error.hpp"

namespace embgo {

Problem::Problem(std::string name, Bounds bounds, std::optional<double> known_optimum)
    : name_(std::move(name)), bounds_(std::move(bounds)), known_optimum_(known_optimum)
{
}

Problem::Problem(std::string name, Bounds bounds, Objective objective, std::optional<double> known_optimum)
    : Problem(std::move(name), std::move(bounds), known_optimum)
{
    objective_ = std::move(objective);
}

Problem Problem::constrained(std::string name, Bounds bounds, ConstrainedObjective objective, double penalty_weight,
                             std::optional<double> known_optimum)
{
    if (!(penalty_weight > 0.0))
        throw Error(ErrorKind::InvalidConfiguration, "penalty weight must be positive");
    Problem p(std::move(name), std::move(bounds), known_optimum);
    p.constrained_ = std::move(objective);
    p.penalty_weight_ = penalty_weight;
    return p;
}

double Problem::evaluate(std::span<const double> x) const
{
    if (x.size() != dim())
        throw Error(ErrorKind::Dimension, name_ + " expects dimension " + std::to_string(dim()));
    if (!constrained_)
        return objective_(x);
    try {
        const Evaluation e = constrained_(x);
        return penalized_fitness(e.objective, e.constraints, penalty_weight_);
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::SingularPoint)
            return std::numeric_limits<double>::infinity();
        throw;
    }
}

Evaluation Problem::evaluate_raw(std::span<const double> x) const
{
    if (x.size() != dim())
        throw Error(ErrorKind::Dimension, name_ + " expects dimension " + std::to_string(dim()));
    if (!constrained_)
        return Evaluation{objective_(x), {}};
    return constrained_(x);
}

} // namespace embgo
