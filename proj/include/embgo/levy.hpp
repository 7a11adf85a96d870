#pragma once

#include <cstddef>

#include "embgo/core.hpp"
#include "embgo/random.hpp"

namespace embgo {

/// Lévy index, restricted to the open interval (0, 2). At 2 the Mantegna
/// scale collapses to zero.
class LevyParams {
public:
    explicit LevyParams(double beta = 1.5);

    double beta() const noexcept { return beta_; }
    /// Mantegna scale for this beta, computed once.
    double sigma() const noexcept { return sigma_; }

private:
    double beta_;
    double sigma_;
};

/// Gamma function for z > 0.
double gamma_fn(double z);

/// Mantegna scale: {Γ(1+β) sin(πβ/2) / [β Γ((1+β)/2) 2^((β-1)/2)]}^(1/β).
double levy_sigma(double beta);

/// `dim` independent steps u / |v|^(1/β), u ~ N(0, σ²), v ~ N(0, 1).
/// Each component draws u then v from rng.normal().
Vector levy_sample(const LevyParams& params, std::size_t dim, Random& rng);

} // namespace embgo
