#pragma once

#include <span>

#include "embgo/core.hpp"
#include "embgo/evaluator.hpp"
#include "embgo/problem.hpp"
#include "embgo/random.hpp"

namespace embgo {

/// Hypersphere around the current best member.
struct SafeZone {
    Vector center;
    double radius = 0.0;
};

/// Radius floor added to the best-worst distance.
inline constexpr double kSafeZoneEpsilon = 1e-12;

struct MbgoParams {
    double delta_low = 0.8;  // radius amplification range
    double delta_high = 1.2;
    // Phase switches; disabling one gives the movement-only and battle-only
    // ablations. Not meant as production configurations.
    bool movement_phase = true;
    bool battle_phase = true;

    void validate() const;
};

/// R = (|best - worst| + eps) * delta, centred on best.
SafeZone safe_zone(const Individual& best, const Individual& worst, double delta);
/// Same, with delta ~ U(delta_low, delta_high).
SafeZone draw_safe_zone(const Individual& best, const Individual& worst, Random& rng,
                        double delta_low = 0.8, double delta_high = 1.2);

/// Boundary inclusive.
bool in_safe_zone(const Individual& x, const SafeZone& zone);

// Candidate constructors. All return the raw, unclamped candidate; the
// optimizer loops clamp before evaluation.

/// X_i + X_best * sin(2 pi r), one scalar r.
Vector move_inside(const Individual& x_i, const Individual& x_best, Random& rng);

/// Per dimension: r < 0.5 -> X_i + N(0,1), else X_i + (X_best - X_i) * r.
Vector move_outside(const Individual& x_i, const Individual& x_best, Random& rng);

/// X_i - X_enemy when X_i is strictly fitter, else X_enemy - X_i.
Vector battle_dir(const Individual& x_i, const Individual& x_enemy);

/// Per dimension: r < 0.5 -> X_i + dir * r, else X_enemy + dir * r.
Vector battle_vs_stronger(const Individual& x_i, const Individual& x_enemy, std::span<const double> dir,
                          Random& rng);

/// X_i + dir * cos(2 pi r), one scalar r.
Vector battle_vs_weaker(const Individual& x_i, std::span<const double> dir, Random& rng);

/// Uniform index in [0, n) excluding `self`. Requires n >= 2.
std::size_t pick_enemy(std::size_t self, std::size_t n, Random& rng);

/// Original two-phase optimizer: a full movement pass then a full battle pass
/// per iteration, 2N evaluations per untruncated iteration.
RunResult run_mbgo(const Problem& problem, const OptimizerConfig& config, Random& rng,
                   const MbgoParams& params = {}, const RunHooks& hooks = {});
RunResult run_mbgo(const Problem& problem, const OptimizerConfig& config, const MbgoParams& params = {},
                   const RunHooks& hooks = {});

} // namespace embgo
