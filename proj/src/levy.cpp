#include "embgo/levy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "embgo/error.hpp"

namespace embgo {

namespace {

void check_beta(double beta)
{
    if (!(beta > 0.0 && beta < 2.0))
        throw Error(ErrorKind::Domain, "Levy index must lie in (0, 2), got " + std::to_string(beta));
}

} // namespace

LevyParams::LevyParams(double beta) : beta_(beta), sigma_(levy_sigma(beta)) {}

double gamma_fn(double z)
{
    if (!(z > 0.0))
        throw Error(ErrorKind::Domain, "gamma_fn requires z > 0, got " + std::to_string(z));
    return std::tgamma(z);
}

double levy_sigma(double beta)
{
    check_beta(beta);
    const double numerator = gamma_fn(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double denominator = beta * gamma_fn((1.0 + beta) / 2.0) * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(numerator / denominator, 1.0 / beta);
}

Vector levy_sample(const LevyParams& params, std::size_t dim, Random& rng)
{
    if (dim == 0)
        throw Error(ErrorKind::Dimension, "Levy sample of dimension 0");
    const double exponent = 1.0 / params.beta();
    Vector step(dim);
    for (auto& s : step) {
        const double u = rng.normal() * params.sigma();
        const double v = rng.normal();
        // u == 0 gives a zero step even if v == 0.
        s = u == 0.0 ? 0.0 : u / std::pow(std::abs(v), exponent);
    }
    return step;
}

} // namespace embgo
