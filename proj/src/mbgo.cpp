#include "embgo/mbgo.hpp"

#include <cmath>
#include <string>

#include "embgo/error.hpp"
#include "extrema_tracker.hpp"
#include "turn_trig.hpp"

namespace embgo {

namespace {

void check_same_dim(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::Dimension,
                    "operands of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

} // namespace

void MbgoParams::validate() const
{
    if (!(delta_low > 0.0 && delta_low < delta_high))
        throw Error(ErrorKind::InvalidConfiguration, "radius ratio needs 0 < delta_low < delta_high");
    if (!movement_phase && !battle_phase)
        throw Error(ErrorKind::InvalidConfiguration, "at least one phase must be enabled");
}

SafeZone safe_zone(const Individual& best, const Individual& worst, double delta)
{
    const double distance = euclidean_distance(best.position, worst.position);
    return SafeZone{best.position, (distance + kSafeZoneEpsilon) * delta};
}

SafeZone draw_safe_zone(const Individual& best, const Individual& worst, Random& rng, double delta_low,
                        double delta_high)
{
    return safe_zone(best, worst, rng.uniform(delta_low, delta_high));
}

bool in_safe_zone(const Individual& x, const SafeZone& zone)
{
    return euclidean_distance(x.position, zone.center) <= zone.radius;
}

Vector move_inside(const Individual& x_i, const Individual& x_best, Random& rng)
{
    check_same_dim(x_i.position, x_best.position);
    const double s = detail::sin_turn(rng.uniform());
    Vector out(x_i.position.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = x_i.position[k] + x_best.position[k] * s;
    return out;
}

Vector move_outside(const Individual& x_i, const Individual& x_best, Random& rng)
{
    check_same_dim(x_i.position, x_best.position);
    Vector out(x_i.position.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double r = rng.uniform();
        if (r < 0.5)
            out[k] = x_i.position[k] + rng.normal();
        else
            out[k] = x_i.position[k] + (x_best.position[k] - x_i.position[k]) * r;
    }
    return out;
}

Vector battle_dir(const Individual& x_i, const Individual& x_enemy)
{
    check_same_dim(x_i.position, x_enemy.position);
    const bool self_fitter = x_i.f() < x_enemy.f();
    Vector dir(x_i.position.size());
    for (std::size_t k = 0; k < dir.size(); ++k)
        dir[k] = self_fitter ? x_i.position[k] - x_enemy.position[k] : x_enemy.position[k] - x_i.position[k];
    return dir;
}

Vector battle_vs_stronger(const Individual& x_i, const Individual& x_enemy, std::span<const double> dir, Random& rng)
{
    check_same_dim(x_i.position, x_enemy.position);
    check_same_dim(x_i.position, dir);
    Vector out(dir.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double r = rng.uniform();
        out[k] = (r < 0.5 ? x_i.position[k] : x_enemy.position[k]) + dir[k] * r;
    }
    return out;
}

Vector battle_vs_weaker(const Individual& x_i, std::span<const double> dir, Random& rng)
{
    check_same_dim(x_i.position, dir);
    const double c = detail::cos_turn(rng.uniform());
    Vector out(dir.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = x_i.position[k] + dir[k] * c;
    return out;
}

std::size_t pick_enemy(std::size_t self, std::size_t n, Random& rng)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidConfiguration, "an enemy needs a population of at least 2");
    const std::size_t k = rng.below(n - 1);
    return k >= self ? k + 1 : k;
}

RunResult run_mbgo(const Problem& problem, const OptimizerConfig& config, Random& rng, const MbgoParams& params,
                   const RunHooks& hooks)
{
    params.validate();
    const std::size_t n = config.pop_size;
    if (config.max_fes < n)
        throw Error(ErrorKind::InvalidConfiguration, "budget " + std::to_string(config.max_fes)
                                                         + " cannot cover the initial population of "
                                                         + std::to_string(n));
    const Bounds& bounds = problem.bounds();
    Evaluator eval(problem, config, hooks);

    Population pop = init_population(n, bounds, rng);
    for (auto& member : pop)
        eval.evaluate(member);
    eval.checkpoint(0, pop);

    detail::ExtremaTracker extrema(pop);
    auto offer = [&](std::size_t i, Vector candidate) {
        clamp_in_place(candidate, bounds);
        const double f = eval.evaluate(candidate);
        if (f < pop[i].f()) {
            pop[i].position = std::move(candidate);
            pop[i].fitness = f;
            extrema.improved(i);
        }
    };

    std::size_t iteration = 0;
    while (!eval.exhausted()) {
        ++iteration;
        if (params.movement_phase) {
            for (std::size_t i = 0; i < n && !eval.exhausted(); ++i) {
                const SafeZone zone = draw_safe_zone(pop[extrema.best()], pop[extrema.worst()], rng, params.delta_low,
                                                     params.delta_high);
                if (in_safe_zone(pop[i], zone)) {
                    eval.note(Operator::SafeZoneInside);
                    offer(i, move_inside(pop[i], pop[extrema.best()], rng));
                } else {
                    eval.note(Operator::SafeZoneOutside);
                    offer(i, move_outside(pop[i], pop[extrema.best()], rng));
                }
            }
        }
        if (params.battle_phase) {
            for (std::size_t i = 0; i < n && !eval.exhausted(); ++i) {
                const std::size_t enemy = pick_enemy(i, n, rng);
                const Vector dir = battle_dir(pop[i], pop[enemy]);
                if (pop[enemy].f() < pop[i].f()) {
                    eval.note(Operator::BattleStronger);
                    offer(i, battle_vs_stronger(pop[i], pop[enemy], dir, rng));
                } else {
                    eval.note(Operator::BattleWeaker);
                    offer(i, battle_vs_weaker(pop[i], dir, rng));
                }
            }
        }
        eval.checkpoint(iteration, pop);
    }
    return eval.finish();
}

RunResult run_mbgo(const Problem& problem, const OptimizerConfig& config, const MbgoParams& params,
                   const RunHooks& hooks)
{
    RngStream rng(config.seed);
    return run_mbgo(problem, config, rng, params, hooks);
}

} // namespace embgo
