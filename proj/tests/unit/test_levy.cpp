#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "embgo/error.hpp"
#include "embgo/levy.hpp"
#include "embgo/random.hpp"
#include "scripted_random.hpp"

using namespace embgo;

namespace {

// Gamma by quadrature of its defining integral, substituting t = s^4 so the
// integrand 4 s^(4z-1) exp(-s^4) is smooth at 0 for z >= 1/4.
double gamma_quadrature(double z)
{
    constexpr int n = 20000; // even
    constexpr double hi = 4.0;
    const double h = hi / n;
    auto f = [z](double s) { return s == 0.0 ? 0.0 : 4.0 * std::pow(s, 4.0 * z - 1.0) * std::exp(-std::pow(s, 4.0)); };
    double acc = f(0.0) + f(hi);
    for (int i = 1; i < n; ++i)
        acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return acc * h / 3.0;
}

double sigma_by_quadrature(double beta)
{
    const double num = gamma_quadrature(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double den = beta * gamma_quadrature((1.0 + beta) / 2.0) * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

std::vector<double> draw(double beta, std::size_t n, std::uint64_t seed)
{
    RngStream rng(seed);
    return levy_sample(LevyParams(beta), n, rng);
}

} // namespace

TEST_CASE("gamma function")
{
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(gamma_quadrature(0.5)).epsilon(1e-10));
    CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_fn(0.0), Error);
    CHECK_THROWS_AS(gamma_fn(-1.5), Error);
}

TEST_CASE("Mantegna scale")
{
    CHECK(std::abs(levy_sigma(1.0) - 1.0) < 1e-15);
    // Frozen high-precision value (50-digit evaluation).
    CHECK(std::abs(levy_sigma(1.5) - 0.6965745025576967927) < 1e-9);
    CHECK(std::abs(levy_sigma(1.5) - sigma_by_quadrature(1.5)) < 1e-9);
    CHECK(std::abs(levy_sigma(0.7) - sigma_by_quadrature(0.7)) < 1e-9);
    CHECK(levy_sigma(1.99) > levy_sigma(1.999));
    CHECK(levy_sigma(1.999) > levy_sigma(1.9999));
    CHECK(levy_sigma(2.0 - 1e-12) < 1e-5);
    for (double bad : {0.0, 2.0, -1.0, 2.5}) {
        CHECK_THROWS_AS(levy_sigma(bad), Error);
        CHECK_THROWS_AS(LevyParams{bad}, Error);
    }
    CHECK(LevyParams{}.beta() == 1.5);
    CHECK(LevyParams{}.sigma() == levy_sigma(1.5));
}

TEST_CASE("zero numerator gives a zero step")
{
    testing::ScriptedRandom rng({}, {0.0, 0.7, 1.0, 1.0});
    const auto step = levy_sample(LevyParams(1.5), 2, rng); // (u, v) pairs: (0, 0.7), (1, 1)
    CHECK(step[0] == 0.0);
    CHECK(step[1] == doctest::Approx(levy_sigma(1.5)));
    CHECK(rng.drained());
}

TEST_CASE("step is u over |v|^(1/beta)")
{
    testing::ScriptedRandom rng({}, {2.0, -4.0});
    const auto step = levy_sample(LevyParams(1.0), 1, rng);
    CHECK(step[0] == doctest::Approx(0.5));
}

TEST_CASE("same seed, same steps")
{
    CHECK(draw(1.5, 64, 11) == draw(1.5, 64, 11));
    CHECK(draw(1.5, 64, 11) != draw(1.5, 64, 12));
}

TEST_CASE("heavy tail and sign symmetry over a million samples")
{
    const auto s = draw(1.5, 1'000'000, 2024);
    const auto n = static_cast<double>(s.size());
    const double positive = static_cast<double>(std::count_if(s.begin(), s.end(), [](double x) { return x > 0; })) / n;
    CHECK(positive >= 0.49);
    CHECK(positive <= 0.51);

    const double beyond5 = static_cast<double>(std::count_if(s.begin(), s.end(), [](double x) { return std::abs(x) > 5; })) / n;
    CHECK(beyond5 >= 0.004);

    std::vector<double> mag(s.size());
    std::transform(s.begin(), s.end(), mag.begin(), [](double x) { return std::abs(x); });
    const auto k = static_cast<std::size_t>(0.999 * n);
    std::nth_element(mag.begin(), mag.begin() + static_cast<std::ptrdiff_t>(k), mag.end());
    CHECK(mag[k] >= 2.0 * 3.29);
}
