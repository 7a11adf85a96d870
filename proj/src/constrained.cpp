#include "embgo/constrained.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "embgo/error.hpp"

namespace embgo {

double penalized_fitness(double f, std::span<const double> g_values, double w)
{
    double violation = 0.0;
    for (double g : g_values)
        violation += std::max(0.0, g);
    return violation > 0.0 ? f + w * violation : f;
}

Evaluation three_bar_truss(std::span<const double> x)
{
    if (x.size() != 2)
        throw Error(ErrorKind::Dimension, "three-bar truss has 2 variables");
    constexpr double kLength = 100.0;
    constexpr double kLoad = 2.0;
    constexpr double kStress = 2.0;
    constexpr double kSqrt2 = std::numbers::sqrt2;
    const double x1 = x[0];
    const double x2 = x[1];
    const double area = kSqrt2 * x1 * x1 + 2.0 * x1 * x2;
    const double diagonal = x1 + kSqrt2 * x2;
    if (area == 0.0 || diagonal == 0.0)
        throw Error(ErrorKind::SingularPoint, "three-bar truss is singular at x1 = 0");
    Evaluation e;
    e.objective = (2.0 * kSqrt2 * x1 + x2) * kLength;
    e.constraints = {
        (kSqrt2 * x1 + x2) * kLoad / area - kStress,
        x2 * kLoad / area - kStress,
        kLoad / diagonal - kStress,
    };
    return e;
}

Problem make_three_bar_truss(double penalty_weight)
{
    return Problem::constrained("three-bar-truss", Bounds::uniform(2, 0.0, 1.0), three_bar_truss, penalty_weight);
}

} // namespace embgo
