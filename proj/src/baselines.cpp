#include "embgo/baselines.hpp"

#include <algorithm>
#include <string>

#include "embgo/error.hpp"

namespace embgo {

namespace {

void check_budget(const OptimizerConfig& config)
{
    if (config.max_fes < config.pop_size)
        throw Error(ErrorKind::InvalidConfiguration, "budget " + std::to_string(config.max_fes)
                                                         + " cannot cover the initial population of "
                                                         + std::to_string(config.pop_size));
}

Population initial_population(const Problem& problem, const OptimizerConfig& config, Random& rng, Evaluator& eval)
{
    Population pop = init_population(config.pop_size, problem.bounds(), rng);
    for (auto& member : pop)
        eval.evaluate(member);
    eval.checkpoint(0, pop);
    return pop;
}

} // namespace

void DeParams::validate() const
{
    if (!(F >= 0.0))
        throw Error(ErrorKind::InvalidConfiguration, "DE scaling factor must be non-negative");
    if (!(Cr >= 0.0 && Cr <= 1.0))
        throw Error(ErrorKind::InvalidConfiguration, "DE crossover rate must lie in [0, 1]");
}

void PsoParams::validate() const
{
    if (!(v_max > 0.0))
        throw Error(ErrorKind::InvalidConfiguration, "PSO speed bound must be positive");
}

Vector de_mutant(std::span<const double> x_i, std::span<const double> x_r1, std::span<const double> x_r2,
                 std::span<const double> x_r3, double F)
{
    const std::size_t d = x_i.size();
    if (x_r1.size() != d || x_r2.size() != d || x_r3.size() != d)
        throw Error(ErrorKind::Dimension, "DE operands differ in length");
    Vector v(d);
    for (std::size_t k = 0; k < d; ++k)
        v[k] = x_i[k] + F * (x_r1[k] - x_i[k]) + F * (x_r2[k] - x_r3[k]);
    return v;
}

Vector binomial_crossover(std::span<const double> parent, std::span<const double> mutant, double Cr,
                          std::size_t forced, Random& rng)
{
    if (parent.size() != mutant.size())
        throw Error(ErrorKind::Dimension, "crossover operands differ in length");
    Vector trial(parent.begin(), parent.end());
    for (std::size_t k = 0; k < trial.size(); ++k) {
        const double r = rng.uniform();
        if (k == forced || r < Cr)
            trial[k] = mutant[k];
    }
    return trial;
}

RunResult run_de(const Problem& problem, const OptimizerConfig& config, Random& rng, const DeParams& params,
                 const RunHooks& hooks)
{
    params.validate();
    const std::size_t n = config.pop_size;
    if (n < 4)
        throw Error(ErrorKind::InvalidConfiguration, "DE/cur-to-rand/1 needs at least 4 members");
    check_budget(config);
    const Bounds& bounds = problem.bounds();
    Evaluator eval(problem, config, hooks);
    Population pop = initial_population(problem, config, rng, eval);

    std::size_t iteration = 0;
    while (!eval.exhausted()) {
        ++iteration;
        Population next = pop;
        for (std::size_t i = 0; i < n && !eval.exhausted(); ++i) {
            std::size_t r1, r2, r3;
            do { r1 = rng.below(n); } while (r1 == i);
            do { r2 = rng.below(n); } while (r2 == i || r2 == r1);
            do { r3 = rng.below(n); } while (r3 == i || r3 == r1 || r3 == r2);
            const Vector mutant = de_mutant(pop[i].position, pop[r1].position, pop[r2].position, pop[r3].position,
                                            params.F);
            const std::size_t forced = rng.below(bounds.dim());
            Vector trial = binomial_crossover(pop[i].position, mutant, params.Cr, forced, rng);
            clamp_in_place(trial, bounds);
            eval.note(Operator::DeTrial);
            const double f = eval.evaluate(trial);
            if (f < pop[i].f())
                next[i] = Individual{std::move(trial), f};
        }
        pop = std::move(next);
        eval.checkpoint(iteration, pop);
    }
    return eval.finish();
}

RunResult run_de(const Problem& problem, const OptimizerConfig& config, const DeParams& params, const RunHooks& hooks)
{
    RngStream rng(config.seed);
    return run_de(problem, config, rng, params, hooks);
}

RunResult run_pso(const Problem& problem, const OptimizerConfig& config, Random& rng, const PsoParams& params,
                  const RunHooks& hooks)
{
    params.validate();
    const std::size_t n = config.pop_size;
    check_budget(config);
    const Bounds& bounds = problem.bounds();
    const std::size_t d = bounds.dim();
    Evaluator eval(problem, config, hooks);
    Population swarm = initial_population(problem, config, rng, eval);
    Population personal_best = swarm;
    std::vector<Vector> velocity(n, Vector(d, 0.0));
    std::size_t global = best_worst_index(personal_best).first;

    std::size_t iteration = 0;
    while (!eval.exhausted()) {
        ++iteration;
        for (std::size_t i = 0; i < n && !eval.exhausted(); ++i) {
            Vector& x = swarm[i].position;
            Vector& v = velocity[i];
            const Vector& pb = personal_best[i].position;
            const Vector& gb = personal_best[global].position;
            for (std::size_t k = 0; k < d; ++k) {
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                v[k] = params.w * v[k] + params.c1 * r1 * (pb[k] - x[k]) + params.c2 * r2 * (gb[k] - x[k]);
                v[k] = std::clamp(v[k], -params.v_max, params.v_max);
                x[k] += v[k];
            }
            clamp_in_place(x, bounds);
            eval.note(Operator::PsoMove);
            const double f = eval.evaluate(x);
            swarm[i].fitness = f;
            if (f < personal_best[i].f()) {
                personal_best[i] = swarm[i];
                if (f < personal_best[global].f())
                    global = i;
            }
        }
        eval.checkpoint(iteration, swarm);
    }
    return eval.finish();
}

RunResult run_pso(const Problem& problem, const OptimizerConfig& config, const PsoParams& params,
                  const RunHooks& hooks)
{
    RngStream rng(config.seed);
    return run_pso(problem, config, rng, params, hooks);
}

RunResult run_random_search(const Problem& problem, const OptimizerConfig& config, Random& rng,
                            const RunHooks& hooks)
{
    if (config.max_fes < 1)
        throw Error(ErrorKind::InvalidConfiguration, "random search needs a budget of at least 1");
    const std::size_t batch = std::max<std::size_t>(1, config.pop_size);
    const Bounds& bounds = problem.bounds();
    Evaluator eval(problem, config, hooks);

    std::size_t iteration = 0;
    while (!eval.exhausted()) {
        Population samples(std::min(batch, eval.remaining()));
        for (auto& s : samples) {
            s.position.resize(bounds.dim());
            for (std::size_t j = 0; j < bounds.dim(); ++j)
                s.position[j] = rng.uniform(bounds.lower()[j], bounds.upper()[j]);
            eval.note(Operator::RandomSample);
            eval.evaluate(s);
        }
        eval.checkpoint(iteration++, samples);
    }
    return eval.finish();
}

RunResult run_random_search(const Problem& problem, const OptimizerConfig& config, const RunHooks& hooks)
{
    RngStream rng(config.seed);
    return run_random_search(problem, config, rng, hooks);
}

} // namespace embgo
