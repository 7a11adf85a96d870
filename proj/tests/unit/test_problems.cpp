#include <doctest.h>

#include <cmath>
#include <limits>
#include <utility>

#include "embgo/benchmarks.hpp"
#include "embgo/constrained.hpp"
#include "embgo/error.hpp"
#include "embgo/random.hpp"

using namespace embgo;

TEST_CASE("every benchmark is zero at the origin")
{
    for (const auto& name : bench::benchmark_names()) {
        for (std::size_t d : {2u, 10u, 30u}) {
            CAPTURE(name);
            CAPTURE(d);
            CHECK(std::abs(bench::evaluate_benchmark(name, Vector(d, 0.0))) <= 1e-12);
        }
    }
    CHECK(bench::benchmark_names().size() == 10);
}

TEST_CASE("benchmark values at a reference point")
{
    // Independent NumPy transcription of the textbook definitions (same
    // origin-centred shifts; Schwefel's peak solved to 40 digits).
    const std::pair<const char*, double> expected[] = {
        {"sphere", 7.875},
        {"bent-cigar", 5625002.25},
        {"zakharov", 8.035400390625},
        {"rosenbrock", 5635.828125},
        {"rastrigin", 47.87499999999999},
        {"ackley", 7.5372813706715505},
        {"griewank", 1.0032652851485386},
        {"levy", 3.848353105757542},
        {"schwefel", 0.99312967308734149},
        {"expanded-schaffer-f6", 1.6547608583131144},
    };
    const Vector x{1.5, -2.25, 0.75};
    for (const auto& [name, value] : expected) {
        CAPTURE(name);
        CHECK(bench::evaluate_benchmark(name, x) == doctest::Approx(value).epsilon(1e-9));
    }
}

TEST_CASE("small benchmark identities")
{
    CHECK(bench::sphere(Vector{0, 0, 0}) == 0.0);
    CHECK(bench::rastrigin(Vector{1, 0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bench::bent_cigar(Vector{1, 1}) == 1.0 + 1e6);
    CHECK(bench::is_benchmark("ackley"));
    CHECK_FALSE(bench::is_benchmark("ackly"));
    CHECK_THROWS_AS(bench::evaluate_benchmark("nope", Vector{0}), Error);
    CHECK_THROWS_AS(bench::make_benchmark("sphere", 0), Error);
}

TEST_CASE("identity transform")
{
    const auto t = bench::Transform::identity(4);
    const Vector x{1, -2, 3, -4};
    CHECK(t.apply(x) == x);
}

TEST_CASE("random transform: orthogonal, seeded, optimum at the shift")
{
    const auto t = bench::Transform::random(10, 99);
    const auto u = bench::Transform::random(10, 99);
    CHECK(t.shift() == u.shift());
    CHECK(t.rotation() == u.rotation());
    for (double s : t.shift())
        CHECK(std::abs(s) <= 80.0);

    RngStream rng(1);
    for (int k = 0; k < 100; ++k) {
        Vector v(10);
        for (auto& c : v)
            c = rng.uniform(-50.0, 50.0);
        const Eigen::Map<const Eigen::VectorXd> ev(v.data(), 10);
        CHECK(std::abs((t.rotation() * ev).norm() - ev.norm()) <= 1e-9);
    }

    const auto zero = bench::apply_transform(t, t.shift());
    for (double z : zero)
        CHECK(z == 0.0);

    Eigen::MatrixXd skew = Eigen::MatrixXd::Identity(2, 2);
    skew(0, 1) = 0.1;
    CHECK_THROWS_AS(bench::Transform(Vector{0, 0}, skew), Error);
}

TEST_CASE("transformed problems keep their optimum at the shift")
{
    const auto t = bench::Transform::random(5, bench::kDefaultTransformSeed);
    for (const auto& name : bench::benchmark_names()) {
        CAPTURE(name);
        const auto p = bench::make_transformed_benchmark(name, 5);
        CHECK(p.name() == "sr-" + name);
        CHECK(std::abs(p.evaluate(t.shift())) <= 1e-12);
        // No better point in a small neighbourhood of the shift.
        RngStream rng(3);
        for (int k = 0; k < 200; ++k) {
            Vector y = t.shift();
            for (auto& c : y)
                c += rng.uniform(-1e-3, 1e-3);
            CHECK(p.evaluate(y) >= p.evaluate(t.shift()));
        }
    }
}

TEST_CASE("static penalty")
{
    CHECK(penalized_fitness(3.0, Vector{-1, -5}) == 3.0);
    CHECK(penalized_fitness(1.0, Vector{0.5, -2}, 1e7) == 5'000'001.0);
    CHECK(penalized_fitness(0.0, Vector{0.0}) == 0.0);
    RngStream rng(2);
    for (int k = 0; k < 1000; ++k) {
        const double f = rng.uniform(-10, 10);
        const Vector g{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const double p = penalized_fitness(f, g);
        CHECK(p >= f);
        CHECK((p == f) == (g[0] <= 0 && g[1] <= 0));
    }
}

TEST_CASE("three-bar truss")
{
    const auto corner = three_bar_truss(Vector{1, 1});
    CHECK(corner.objective == doctest::Approx(382.842712474619).epsilon(1e-12));
    CHECK(corner.constraints[0] == doctest::Approx(-0.585786437626905).epsilon(1e-9));
    CHECK(corner.constraints[1] == doctest::Approx(-1.414213562373095).epsilon(1e-9));
    CHECK(corner.constraints[2] == doctest::Approx(-1.171572875253810).epsilon(1e-9));

    const auto near_opt = three_bar_truss(Vector{0.7887, 0.4082});
    CHECK(near_opt.objective == doctest::Approx(263.898047).epsilon(1e-8));
    CHECK(std::abs(near_opt.constraints[0]) < 1e-4);
    CHECK(near_opt.constraints[1] < 0);
    CHECK(near_opt.constraints[2] < 0);

    const auto problem = make_three_bar_truss();
    CHECK(problem.is_constrained());
    CHECK(problem.penalty_weight() == 1e7);
    CHECK(problem.evaluate(Vector{1, 1}) == corner.objective);
    // SLSQP reference optimum.
    CHECK(problem.evaluate_raw(Vector{0.78867513, 0.40824830}).objective == doctest::Approx(263.89584337).epsilon(1e-8));
    CHECK(problem.evaluate(Vector{0.7887, 0.4082}) == near_opt.objective);

    CHECK_THROWS_AS(three_bar_truss(Vector{0, 0}), Error);
    CHECK(problem.evaluate(Vector{0, 0}) == std::numeric_limits<double>::infinity());
    CHECK(problem.evaluate(Vector{0.1, 0.05}) > 1e6);
}
