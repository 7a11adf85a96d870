#pragma once

#include <span>

#include "embgo/problem.hpp"

namespace embgo {

inline constexpr double kDefaultPenaltyWeight = 1e7;

/// Static penalty: f + w * sum(max(0, g_i)).
double penalized_fitness(double f, std::span<const double> g_values, double w = kDefaultPenaltyWeight);

/// Three-bar truss design on [0, 1]^2 with P = 2, sigma = 2, l = 100.
/// Throws SingularPoint at x = (0, 0).
Evaluation three_bar_truss(std::span<const double> x);

/// Penalized truss problem. Evaluation errors map to +infinity fitness.
Problem make_three_bar_truss(double penalty_weight = kDefaultPenaltyWeight);

} // namespace embgo
