#include "embgo/embgo.hpp"

#include <cmath>
#include <string>

#include "embgo/error.hpp"
#include "extrema_tracker.hpp"
#include "turn_trig.hpp"

namespace embgo {

void EmbgoParams::validate() const
{
    if (!(delta_low > 0.0 && delta_low < delta_high))
        throw Error(ErrorKind::InvalidConfiguration, "radius ratio needs 0 < delta_low < delta_high");
    if (!(beta > 0.0 && beta < 2.0))
        throw Error(ErrorKind::InvalidConfiguration, "Levy index must lie in (0, 2)");
}

Vector diff_mutation(const Individual& x_i, const Individual& x_best, std::span<const double> x_mean, Random& rng,
                     bool shared_coefficient)
{
    const std::size_t d = x_i.position.size();
    if (x_best.position.size() != d || x_mean.size() != d)
        throw Error(ErrorKind::Dimension, "mutation operands differ in length");
    const double s1 = detail::sin_turn(rng.uniform());
    const double s2 = shared_coefficient ? s1 : detail::sin_turn(rng.uniform());
    Vector out(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double xi = x_i.position[k];
        out[k] = xi + (x_best.position[k] - xi) * s1 + (x_mean[k] - xi) * s2;
    }
    return out;
}

Vector levy_move(const Individual& x_i, const LevyParams& levy, Random& rng)
{
    Vector out = levy_sample(levy, x_i.position.size(), rng);
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] += x_i.position[k];
    return out;
}

RunResult run_embgo(const Problem& problem, const OptimizerConfig& config, Random& rng, const EmbgoParams& params,
                    const RunHooks& hooks)
{
    params.validate();
    const std::size_t n = config.pop_size;
    if (config.max_fes < n)
        throw Error(ErrorKind::InvalidConfiguration, "budget " + std::to_string(config.max_fes)
                                                         + " cannot cover the initial population of "
                                                         + std::to_string(n));
    const Bounds& bounds = problem.bounds();
    const LevyParams levy(params.beta);
    Evaluator eval(problem, config, hooks);

    Population pop = init_population(n, bounds, rng);
    for (auto& member : pop)
        eval.evaluate(member);
    eval.checkpoint(0, pop);

    detail::ExtremaTracker extrema(pop);
    std::size_t iteration = 0;
    while (!eval.exhausted()) {
        ++iteration;
        // Centroid is refreshed once per iteration.
        const Vector mean = centroid(pop);
        for (std::size_t i = 0; i < n && !eval.exhausted(); ++i) {
            Vector candidate;
            if (rng.uniform() < 0.5) {
                const SafeZone zone = draw_safe_zone(pop[extrema.best()], pop[extrema.worst()], rng,
                                                     params.delta_low, params.delta_high);
                if (in_safe_zone(pop[i], zone)) {
                    eval.note(Operator::DiffMutation);
                    candidate = diff_mutation(pop[i], pop[extrema.best()], mean, rng,
                                              params.shared_mutation_coefficient);
                } else {
                    eval.note(Operator::LevyFlight);
                    candidate = levy_move(pop[i], levy, rng);
                }
            } else {
                const std::size_t enemy = pick_enemy(i, n, rng);
                const Vector dir = battle_dir(pop[i], pop[enemy]);
                if (pop[enemy].f() < pop[i].f()) {
                    eval.note(Operator::BattleStronger);
                    candidate = battle_vs_stronger(pop[i], pop[enemy], dir, rng);
                } else {
                    eval.note(Operator::BattleWeaker);
                    candidate = battle_vs_weaker(pop[i], dir, rng);
                }
            }
            clamp_in_place(candidate, bounds);
            const double f = eval.evaluate(candidate);
            if (f < pop[i].f()) {
                pop[i].position = std::move(candidate);
                pop[i].fitness = f;
                extrema.improved(i);
            }
        }
        eval.checkpoint(iteration, pop);
    }
    return eval.finish();
}

RunResult run_embgo(const Problem& problem, const OptimizerConfig& config, const EmbgoParams& params,
                    const RunHooks& hooks)
{
    RngStream rng(config.seed);
    return run_embgo(problem, config, rng, params, hooks);
}

} // namespace embgo
