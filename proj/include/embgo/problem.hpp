#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "embgo/core.hpp"

namespace embgo {

/// Objective value plus constraint values, g_i <= 0 meaning feasible.
struct Evaluation {
    double objective = 0.0;
    std::vector<double> constraints;
};

/// Minimization problem on a box. For constrained problems `evaluate`
/// returns the penalized fitness; `evaluate_raw` exposes the parts.
class Problem {
public:
    using Objective = std::function<double(std::span<const double>)>;
    using ConstrainedObjective = std::function<Evaluation(std::span<const double>)>;

    Problem(std::string name, Bounds bounds, Objective objective, std::optional<double> known_optimum = {});

    static Problem constrained(std::string name, Bounds bounds, ConstrainedObjective objective,
                               double penalty_weight, std::optional<double> known_optimum = {});

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return bounds_.dim(); }
    const Bounds& bounds() const noexcept { return bounds_; }
    const std::optional<double>& known_optimum() const noexcept { return known_optimum_; }
    bool is_constrained() const noexcept { return static_cast<bool>(constrained_); }
    double penalty_weight() const noexcept { return penalty_weight_; }

    double evaluate(std::span<const double> x) const;
    Evaluation evaluate_raw(std::span<const double> x) const;

private:
    Problem(std::string name, Bounds bounds, std::optional<double> known_optimum);

    std::string name_;
    Bounds bounds_;
    Objective objective_;
    ConstrainedObjective constrained_;
    double penalty_weight_ = 0.0;
    std::optional<double> known_optimum_;
};

} // namespace embgo
