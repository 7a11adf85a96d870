#include "embgo/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "embgo/error.hpp"

namespace embgo {

Bounds::Bounds(Vector lower, Vector upper) : lower_(std::move(lower)), upper_(std::move(upper))
{
    if (lower_.size() != upper_.size())
        throw Error(ErrorKind::Dimension, "lower and upper bounds differ in length");
    if (lower_.empty())
        throw Error(ErrorKind::InvalidBounds, "zero-dimensional box");
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!(lower_[j] < upper_[j]))
            throw Error(ErrorKind::InvalidBounds, "lower >= upper in dimension " + std::to_string(j));
    }
}

Bounds Bounds::uniform(std::size_t dim, double lo, double hi)
{
    return Bounds(Vector(dim, lo), Vector(dim, hi));
}

bool Bounds::contains(std::span<const double> x) const
{
    if (x.size() != dim())
        return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] >= lower_[j] && x[j] <= upper_[j]))
            return false;
    }
    return true;
}

Population init_population(std::size_t n, const Bounds& bounds, Random& rng)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidConfiguration, "population size must be at least 2, got " + std::to_string(n));
    Population pop(n);
    for (auto& member : pop) {
        member.position.resize(bounds.dim());
        for (std::size_t j = 0; j < bounds.dim(); ++j)
            member.position[j] = rng.uniform(bounds.lower()[j], bounds.upper()[j]);
    }
    return pop;
}

void clamp_in_place(std::span<double> position, const Bounds& bounds)
{
    if (position.size() != bounds.dim())
        throw Error(ErrorKind::Dimension, "position has " + std::to_string(position.size()) + " components, box has "
                                              + std::to_string(bounds.dim()));
    for (std::size_t j = 0; j < position.size(); ++j)
        position[j] = std::clamp(position[j], bounds.lower()[j], bounds.upper()[j]);
}

Vector clamp(std::span<const double> position, const Bounds& bounds)
{
    Vector out(position.begin(), position.end());
    clamp_in_place(out, bounds);
    return out;
}

const Individual& greedy_replace(const Individual& parent, const Individual& offspring)
{
    return offspring.f() < parent.f() ? offspring : parent;
}

std::pair<std::size_t, std::size_t> best_worst_index(const Population& pop)
{
    if (pop.empty())
        throw Error(ErrorKind::InvalidConfiguration, "empty population");
    std::size_t best = 0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        if (!pop[i].fitness)
            throw Error(ErrorKind::EvaluationOrder, "member " + std::to_string(i) + " has no fitness");
        if (*pop[i].fitness < *pop[best].fitness)
            best = i;
        if (*pop[i].fitness > *pop[worst].fitness)
            worst = i;
    }
    return {best, worst};
}

std::pair<Individual, Individual> best_worst(const Population& pop)
{
    auto [best, worst] = best_worst_index(pop);
    return {pop[best], pop[worst]};
}

Vector centroid(const Population& pop)
{
    if (pop.empty())
        return {};
    Vector mean(pop.front().position.size(), 0.0);
    for (const auto& member : pop) {
        for (std::size_t j = 0; j < mean.size(); ++j)
            mean[j] += member.position[j];
    }
    for (auto& m : mean)
        m /= static_cast<double>(pop.size());
    return mean;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::Dimension, "distance between vectors of different length");
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        sum += d * d;
    }
    return std::sqrt(sum);
}

} // namespace embgo
