#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "embgo/error.hpp"
#include "embgo/random.hpp"
#include "embgo/stats.hpp"

using namespace embgo;
using namespace embgo::stats;

namespace {

double pair_count_u(const std::vector<double>& a, const std::vector<double>& b)
{
    double u = 0.0;
    for (double x : a)
        for (double y : b)
            u += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
    return u;
}

// Exact p by relabelling: every size-|a| subset of the pooled sample is
// equally likely under the null.
double enumerated_p(const std::vector<double>& a, const std::vector<double>& b, Alternative alt)
{
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::size_t n = pooled.size(), na = a.size();
    const double centre = static_cast<double>(na * b.size()) / 2.0;
    const double observed = pair_count_u(a, b);

    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(na), true);
    double total = 0.0, tail = 0.0;
    do {
        std::vector<double> x, y;
        for (std::size_t i = 0; i < n; ++i)
            (pick[i] ? x : y).push_back(pooled[i]);
        const double u = pair_count_u(x, y);
        total += 1.0;
        bool hit = false;
        switch (alt) {
        case Alternative::TwoSided: hit = std::abs(u - centre) >= std::abs(observed - centre); break;
        case Alternative::Less: hit = u <= observed; break;
        case Alternative::Greater: hit = u >= observed; break;
        }
        tail += hit;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return std::min(1.0, tail / total);
}

std::vector<double> sample(RngStream& rng, std::size_t n, bool ties)
{
    std::vector<double> v(n);
    for (auto& x : v)
        x = ties ? static_cast<double>(rng.below(4)) : rng.uniform();
    return v;
}

Population members(std::initializer_list<Vector> xs)
{
    Population pop;
    for (const auto& x : xs)
        pop.push_back({x, 0.0});
    return pop;
}

} // namespace

TEST_CASE("population diversity")
{
    const auto box = Bounds::uniform(2, -1, 1);
    CHECK(population_diversity(members({{0.3, 0.3}, {0.3, 0.3}, {0.3, 0.3}}), box) == 0.0);
    CHECK(population_diversity(members({{-1}, {1}}), Bounds::uniform(1, -1, 1)) == 0.5);
    CHECK(population_diversity(members({{0.9, -0.2}}), box) == 0.0);

    RngStream rng(17);
    for (int k = 0; k < 10000; ++k) {
        const std::size_t n = 1 + rng.below(12), d = 1 + rng.below(6);
        const double lo = rng.uniform(-100, 0), hi = lo + rng.uniform(1e-3, 200);
        const auto bounds = Bounds::uniform(d, lo, hi);
        Population pop(n);
        for (auto& m : pop) {
            m.position.resize(d);
            for (auto& x : m.position) {
                const double pick = rng.uniform();
                x = pick < 0.3 ? lo : pick < 0.6 ? hi : rng.uniform(lo, hi);
            }
        }
        const double pd = population_diversity(pop, bounds);
        REQUIRE(pd >= 0.0);
        REQUIRE(pd <= 1.0);
    }
}

TEST_CASE("Mann-Whitney small examples")
{
    const std::vector<double> a{1, 2}, b{3, 4};
    const auto r = mann_whitney_u(a, b);
    CHECK(r.u == 0.0);
    CHECK(r.exact);
    CHECK(r.p == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const std::vector<double> same{4, 1, 3, 2, 5};
    CHECK(mann_whitney_u(same, same).p >= 0.99);

    RngStream rng(3);
    for (int k = 0; k < 200; ++k) {
        const auto x = sample(rng, 1 + rng.below(12), true), y = sample(rng, 1 + rng.below(12), true);
        CHECK(mann_whitney_u(x, y).u + mann_whitney_u(y, x).u == static_cast<double>(x.size() * y.size()));
    }
    CHECK_THROWS_AS(mann_whitney_u(std::vector<double>{}, b), Error);
}

TEST_CASE("exact Mann-Whitney equals full enumeration")
{
    RngStream rng(11);
    for (std::size_t na = 1; na <= 36; ++na) {
        for (std::size_t nb = 1; na * nb <= 36; ++nb) {
            for (int rep = 0; rep < 4; ++rep) {
                const bool ties = rep % 2 == 0;
                const auto a = sample(rng, na, ties), b = sample(rng, nb, ties);
                for (auto alt : {Alternative::TwoSided, Alternative::Less, Alternative::Greater}) {
                    CAPTURE(na);
                    CAPTURE(nb);
                    const auto got = mann_whitney_u_exact(a, b, alt);
                    REQUIRE(got.u == pair_count_u(a, b));
                    REQUIRE(std::abs(got.p - enumerated_p(a, b, alt)) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("exact path switches to normal above the pair limit")
{
    RngStream rng(5);
    CHECK(mann_whitney_u(sample(rng, 8, false), sample(rng, 8, false)).exact);
    CHECK_FALSE(mann_whitney_u(sample(rng, 8, false), sample(rng, 9, false)).exact);
}

TEST_CASE("normal approximation tracks the exact p at n = 8")
{
    RngStream rng(23);
    double worst = 0.0;
    for (int k = 0; k < 300; ++k) {
        auto a = sample(rng, 8, false), b = sample(rng, 8, false);
        const double shift = rng.uniform(0.0, 0.6);
        for (auto& x : b)
            x += shift;
        for (auto alt : {Alternative::TwoSided, Alternative::Less, Alternative::Greater}) {
            const double exact = enumerated_p(a, b, alt);
            worst = std::max(worst, std::abs(mann_whitney_u_normal(a, b, alt).p - exact));
        }
    }
    CHECK(worst <= 0.02);
}

TEST_CASE("normal approximation separates clearly different samples")
{
    std::vector<double> a(30), b(30);
    std::iota(a.begin(), a.end(), 0.0);
    std::iota(b.begin(), b.end(), 100.0);
    const auto r = mann_whitney_u(a, b);
    CHECK_FALSE(r.exact);
    CHECK(r.p < 1e-9);
    CHECK(mann_whitney_u(a, b, Alternative::Less).p < 1e-9);
    CHECK(mann_whitney_u(a, b, Alternative::Greater).p > 0.99);
}

TEST_CASE("Holm step-down")
{
    auto near = [](const std::vector<double>& got, const std::vector<double>& want) {
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    };
    near(holm_adjust(std::vector<double>{0.5}), {0.5});
    near(holm_adjust(std::vector<double>{0.01, 0.04}), {0.02, 0.04});
    near(holm_adjust(std::vector<double>{0.03, 0.01, 0.04}), {0.06, 0.03, 0.06});
    near(holm_adjust(std::vector<double>{0.9, 0.6}), {1.0, 1.0});
    CHECK_THROWS_AS(holm_adjust(std::vector<double>{1.5}), Error);

    RngStream rng(8);
    for (int k = 0; k < 500; ++k) {
        std::vector<double> p(1 + rng.below(10));
        for (auto& x : p)
            x = rng.uniform();
        const auto adj = holm_adjust(p);
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(adj[i] >= p[i]);
            for (std::size_t j = 0; j < p.size(); ++j)
                if (p[i] < p[j])
                    CHECK(adj[i] <= adj[j]);
        }
    }
}

TEST_CASE("descriptive statistics")
{
    const std::vector<double> v{4, 1, 3, 2};
    CHECK(mean(v) == 2.5);
    CHECK(median(v) == 2.5);
    CHECK(median(std::vector<double>{5, 1, 3}) == 3.0);
    CHECK(stddev(v) == doctest::Approx(std::sqrt(5.0 / 3.0)));
    CHECK(stddev(std::vector<double>{7}) == 0.0);
    CHECK(midranks(std::vector<double>{10, 20, 20, 5}) == std::vector<double>{2, 3.5, 3.5, 1});
}

TEST_CASE("significance marks")
{
    ComparisonMatrix m({"p1", "p2", "p3"}, {"ref", "copy", "worse", "better"});
    RngStream rng(2);
    for (std::size_t p = 0; p < 3; ++p) {
        std::vector<double> ref(30), worse(30), better(30);
        for (std::size_t i = 0; i < 30; ++i) {
            ref[i] = rng.uniform(0, 1);
            worse[i] = rng.uniform(2, 3);
            better[i] = rng.uniform(-3, -2);
        }
        m.set_samples(p, 0, ref);
        m.set_samples(p, 1, ref);
        m.set_samples(p, 2, worse);
        m.set_samples(p, 3, better);
    }
    const auto marks = significance_marks(m, 0);
    for (std::size_t p = 0; p < 3; ++p) {
        CHECK(marks.marks[p][0] == Mark::Equal);
        CHECK(marks.marks[p][1] == Mark::Equal);
        CHECK(marks.marks[p][2] == Mark::Better);
        CHECK(marks.marks[p][3] == Mark::Worse);
    }
    for (std::size_t a = 1; a < 4; ++a) {
        const auto c = marks.counts(a);
        CHECK(c.better + c.equal + c.worse == 3);
    }
    CHECK(mark_symbol(Mark::Better) == "+");
    CHECK(mark_symbol(Mark::Equal) == "≈");
    CHECK(mark_symbol(Mark::Worse) == "-");
    CHECK_THROWS_AS(ComparisonMatrix({"p"}, {"only"}), Error);
    ComparisonMatrix empty({"p"}, {"a", "b"});
    CHECK_THROWS_AS(empty.samples(0, 0), Error);
}

TEST_CASE("average rank")
{
    ComparisonMatrix one({"p"}, {"a", "b", "c"});
    one.set_samples(0, 0, {3});
    one.set_samples(0, 1, {1});
    one.set_samples(0, 2, {2});
    CHECK(average_rank(one) == std::vector<double>{3, 1, 2});

    ComparisonMatrix tie({"p"}, {"a", "b"});
    tie.set_samples(0, 0, {4, 6});
    tie.set_samples(0, 1, {5, 5});
    CHECK(average_rank(tie) == std::vector<double>{1.5, 1.5});

    RngStream rng(4);
    ComparisonMatrix many({"p1", "p2"}, {"a", "b", "c", "d"});
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t a = 0; a < 4; ++a)
            many.set_samples(p, a, {rng.uniform(), rng.uniform()});
    const auto r = average_rank(many);
    CHECK(std::accumulate(r.begin(), r.end(), 0.0) == doctest::Approx(10.0));
}
