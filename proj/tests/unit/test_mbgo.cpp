#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "embgo/benchmarks.hpp"
#include "embgo/error.hpp"
#include "embgo/mbgo.hpp"
#include "scripted_random.hpp"

using namespace embgo;
using embgo::testing::ScriptedRandom;

namespace {

Individual at(Vector x, double f = 0.0)
{
    return Individual{std::move(x), f};
}

// Counts normal() calls on top of a real stream.
class CountingRandom final : public Random {
public:
    explicit CountingRandom(std::uint64_t seed) : inner_(seed) {}
    double uniform() override { return inner_.uniform(); }
    double normal() override
    {
        ++normals;
        return inner_.normal();
    }
    std::size_t below(std::size_t n) override { return inner_.below(n); }
    using Random::uniform;
    std::size_t normals = 0;

private:
    RngStream inner_;
};

} // namespace

TEST_CASE("safe-zone radius")
{
    CHECK(safe_zone(at({1, 1}), at({1, 1}), 1.0).radius == 1e-12);
    const auto z = safe_zone(at({0, 0}), at({3, 4}), 1.0);
    CHECK(z.radius == 5.0 + 1e-12);
    CHECK(z.center == Vector{0, 0});

    RngStream rng(1);
    const auto best = at({0.5, -2.0}), worst = at({7.0, 3.0});
    const double base = euclidean_distance(best.position, worst.position) + kSafeZoneEpsilon;
    for (int i = 0; i < 10000; ++i) {
        const double ratio = draw_safe_zone(best, worst, rng).radius / base;
        REQUIRE(ratio >= 0.8);
        REQUIRE(ratio <= 1.2);
    }
}

TEST_CASE("safe-zone membership is boundary inclusive")
{
    const SafeZone zone{{0, 0}, 5.0};
    CHECK(in_safe_zone(at({0, 0}), zone));
    CHECK(in_safe_zone(at({3, 4}), zone));
    CHECK_FALSE(in_safe_zone(at({0, 6}), zone));
}

TEST_CASE("movement inside the zone")
{
    const auto xi = at({1, 1}), xb = at({2, -2});
    ScriptedRandom half({0.5});
    CHECK(move_inside(xi, xb, half) == Vector{1, 1});
    ScriptedRandom quarter({0.25});
    CHECK(move_inside(xi, xb, quarter) == Vector{3, -1});
    ScriptedRandom three_quarters({0.75});
    CHECK(move_inside(xi, xb, three_quarters) == Vector{-1, 3});
    CHECK(three_quarters.drained());
}

TEST_CASE("movement outside the zone")
{
    SUBCASE("normal branch and convex branch")
    {
        ScriptedRandom rng({0.2, 0.75}, {-1.5});
        const auto out = move_outside(at({1, 1}), at({3, 5}), rng);
        CHECK(out == Vector{-0.5, 1 + 4 * 0.75});
        CHECK(rng.drained());
    }
    SUBCASE("convex step approaches the best")
    {
        ScriptedRandom rng({std::nextafter(1.0, 0.0)});
        const auto out = move_outside(at({-7}), at({9}), rng);
        CHECK(out[0] == doctest::Approx(9.0).epsilon(1e-12));
    }
    SUBCASE("no difference, no move")
    {
        ScriptedRandom rng({0.5, 0.6, 0.99});
        CHECK(move_outside(at({4, -3, 2}), at({4, -3, 2}), rng) == Vector{4, -3, 2});
    }
    SUBCASE("branch frequency")
    {
        CountingRandom rng(5);
        const std::size_t d = 100000;
        move_outside(at(Vector(d, 0.0)), at(Vector(d, 1.0)), rng);
        const double freq = static_cast<double>(rng.normals) / static_cast<double>(d);
        CHECK(std::abs(freq - 0.5) <= 0.02);
    }
}

TEST_CASE("battle direction")
{
    CHECK(battle_dir(at({5}, 1), at({3}, 2)) == Vector{2});
    CHECK(battle_dir(at({5}, 2), at({3}, 1)) == Vector{-2});
    CHECK(battle_dir(at({5}, 1), at({3}, 1)) == Vector{-2});
}

TEST_CASE("battle against a stronger enemy")
{
    const auto xi = at({1, 2}, 5), xe = at({10, 20}, 1);
    SUBCASE("zero direction lands on one of the two")
    {
        ScriptedRandom rng({0.1, 0.9});
        CHECK(battle_vs_stronger(xi, xe, Vector{0, 0}, rng) == Vector{1, 20});
    }
    SUBCASE("scaled step from either side")
    {
        ScriptedRandom rng({0.25, 0.5});
        const Vector dir = battle_dir(xi, xe); // (9, 18)
        CHECK(battle_vs_stronger(xi, xe, dir, rng) == Vector{1 + 9 * 0.25, 20 + 18 * 0.5});
    }
    SUBCASE("coincident players stay put")
    {
        RngStream rng(3);
        CHECK(battle_vs_stronger(xi, at({1, 2}, 1), battle_dir(xi, at({1, 2}, 1)), rng) == Vector{1, 2});
    }
    SUBCASE("branch frequency")
    {
        RngStream rng(8);
        const std::size_t d = 100000;
        const auto out = battle_vs_stronger(at(Vector(d, 0.0)), at(Vector(d, 1.0)), Vector(d, 0.0), rng);
        const double freq = static_cast<double>(std::count(out.begin(), out.end(), 0.0)) / static_cast<double>(d);
        CHECK(std::abs(freq - 0.5) <= 0.02);
    }
}

TEST_CASE("battle against a weaker enemy")
{
    const auto xi = at({1, 1}, 1);
    const Vector dir{2, -4};
    ScriptedRandom quarter({0.25});
    CHECK(battle_vs_weaker(xi, dir, quarter) == Vector{1, 1});
    ScriptedRandom zero({0.0});
    CHECK(battle_vs_weaker(xi, dir, zero) == Vector{3, -3});
    ScriptedRandom half({0.5});
    CHECK(battle_vs_weaker(xi, dir, half) == Vector{-1, 5});
}

TEST_CASE("enemy selection")
{
    RngStream rng(4);
    for (int i = 0; i < 100; ++i) {
        CHECK(pick_enemy(0, 2, rng) == 1);
        CHECK(pick_enemy(1, 2, rng) == 0);
    }
    std::map<std::size_t, int> hits;
    for (int i = 0; i < 40000; ++i)
        ++hits[pick_enemy(2, 5, rng)];
    CHECK(hits.size() == 4);
    CHECK_FALSE(hits.contains(2));
    for (auto [k, h] : hits)
        CHECK(std::abs(h - 10000) < 500);
    CHECK_THROWS_AS(pick_enemy(0, 1, rng), Error);
}

TEST_CASE("parameters are validated")
{
    CHECK_THROWS_AS((MbgoParams{1.2, 0.8}.validate()), Error);
    CHECK_THROWS_AS((MbgoParams{0.0, 1.0}.validate()), Error);
    CHECK_THROWS_AS((MbgoParams{0.8, 1.2, false, false}.validate()), Error);
    CHECK_NOTHROW(MbgoParams{}.validate());
}

TEST_CASE("run: budget of one population")
{
    const auto problem = bench::make_benchmark("sphere", 4);
    OptimizerConfig cfg{10, 10, 77};
    const auto r = run_mbgo(problem, cfg);
    CHECK(r.trace.size() == 1);
    CHECK(r.fes_used == 10);

    RngStream rng(77);
    const auto pop = init_population(10, problem.bounds(), rng);
    double best = INFINITY;
    for (const auto& m : pop)
        best = std::min(best, problem.evaluate(m.position));
    CHECK(r.best.f() == best);

    cfg.max_fes = 9;
    CHECK_THROWS_AS(run_mbgo(problem, cfg), Error);
}

TEST_CASE("run: two evaluations per member per iteration")
{
    const auto problem = bench::make_benchmark("rastrigin", 5);
    const OptimizerConfig cfg{8, 8 + 16 * 5 + 3, 2};
    std::size_t count = 0;
    std::vector<std::size_t> per_iteration;
    RunHooks hooks;
    hooks.on_evaluation = [&](std::span<const double>, double) { ++count; };
    hooks.on_iteration = [&](std::size_t, std::size_t, const Population&) {
        per_iteration.push_back(count);
        count = 0;
    };
    const auto r = run_mbgo(problem, cfg, {}, hooks);
    REQUIRE(per_iteration.size() == 7);
    CHECK(per_iteration[0] == 8);
    for (std::size_t k = 1; k < 6; ++k)
        CHECK(per_iteration[k] == 16);
    CHECK(per_iteration[6] == 3);
    CHECK(r.fes_used == cfg.max_fes);
}

TEST_CASE("run: ablations use one evaluation per member")
{
    const auto problem = bench::make_benchmark("sphere", 3);
    const OptimizerConfig cfg{6, 6 + 6 * 4, 5};
    for (const MbgoParams p : {MbgoParams{0.8, 1.2, true, false}, MbgoParams{0.8, 1.2, false, true}}) {
        const auto r = run_mbgo(problem, cfg, p);
        CHECK(r.trace.size() == 5);
        CHECK(r.trace.back().fes == 30);
    }
}
