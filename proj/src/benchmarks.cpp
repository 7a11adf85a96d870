#include "embgo/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "embgo/error.hpp"
#include "embgo/random.hpp"

namespace embgo::bench {

namespace {

constexpr double kPi = std::numbers::pi;

using Fn = double (*)(std::span<const double>);

struct Entry {
    std::string_view name;
    Fn fn;
};

constexpr Entry kRegistry[] = {
    {"sphere", sphere},
    {"bent-cigar", bent_cigar},
    {"zakharov", zakharov},
    {"rosenbrock", rosenbrock},
    {"rastrigin", rastrigin},
    {"ackley", ackley},
    {"griewank", griewank},
    {"levy", levy},
    {"schwefel", schwefel},
    {"expanded-schaffer-f6", expanded_schaffer_f6},
};

Fn lookup(std::string_view name)
{
    for (const auto& e : kRegistry) {
        if (e.name == name)
            return e.fn;
    }
    throw Error(ErrorKind::Registry, "benchmark '" + std::string(name) + "'");
}

double schwefel_term(double z)
{
    return z * std::sin(std::sqrt(std::abs(z)));
}

// Maximiser of z sin(sqrt z) near 420.97: root of sin(s) + (s/2) cos(s) with
// s = sqrt(z), found by Newton's method so the shifted optimum is exact.
double schwefel_argmax()
{
    double s = std::sqrt(420.9687);
    for (int it = 0; it < 50; ++it) {
        const double g = std::sin(s) + 0.5 * s * std::cos(s);
        const double dg = 1.5 * std::cos(s) - 0.5 * s * std::sin(s);
        const double step = g / dg;
        s -= step;
        if (std::abs(step) < 1e-16 * s)
            break;
    }
    return s * s;
}

const double kSchwefelShift = schwefel_argmax();
const double kSchwefelPeak = schwefel_term(kSchwefelShift);

} // namespace

const std::vector<std::string>& benchmark_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : kRegistry)
            out.emplace_back(e.name);
        return out;
    }();
    return names;
}

bool is_benchmark(std::string_view name)
{
    return std::any_of(std::begin(kRegistry), std::end(kRegistry), [&](const Entry& e) { return e.name == name; });
}

double evaluate_benchmark(std::string_view name, std::span<const double> x)
{
    return lookup(name)(x);
}

double sphere(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return s;
}

double bent_cigar(std::span<const double> x)
{
    double s = x[0] * x[0];
    for (std::size_t i = 1; i < x.size(); ++i)
        s += 1e6 * x[i] * x[i];
    return s;
}

double zakharov(std::span<const double> x)
{
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s1 += x[i] * x[i];
        s2 += 0.5 * static_cast<double>(i + 1) * x[i];
    }
    return s1 + s2 * s2 + s2 * s2 * s2 * s2;
}

// Shifted by one so the optimum sits at the origin.
double rosenbrock(std::span<const double> x)
{
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i] + 1.0;
        const double b = x[i + 1] + 1.0;
        s += 100.0 * (a * a - b) * (a * a - b) + (a - 1.0) * (a - 1.0);
    }
    return s;
}

double rastrigin(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x)
        s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    return s;
}

double ackley(std::span<const double> x)
{
    const double d = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    const double f = -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 + std::numbers::e;
    return std::max(f, 0.0);
}

double griewank(std::span<const double> x)
{
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i] / 4000.0;
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s - p + 1.0;
}

// w = 1 + x / 4, optimum at x = 0.
double levy(std::span<const double> x)
{
    const std::size_t d = x.size();
    auto w = [&](std::size_t i) { return 1.0 + x[i] / 4.0; };
    const double s0 = std::sin(kPi * w(0));
    double f = s0 * s0;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double wi = w(i);
        const double si = std::sin(kPi * wi + 1.0);
        f += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * si * si);
    }
    const double wd = w(d - 1);
    const double sd = std::sin(2.0 * kPi * wd);
    f += (wd - 1.0) * (wd - 1.0) * (1.0 + sd * sd);
    return f;
}

// Modified Schwefel with the out-of-range handling of the CEC suites.
double schwefel(std::span<const double> x)
{
    const double d = static_cast<double>(x.size());
    double f = 0.0;
    for (double v : x) {
        const double z = v + kSchwefelShift;
        double g;
        if (z > 500.0) {
            const double m = 500.0 - std::fmod(z, 500.0);
            g = m * std::sin(std::sqrt(std::abs(m))) - (z - 500.0) * (z - 500.0) / (10000.0 * d);
        } else if (z < -500.0) {
            const double m = std::fmod(std::abs(z), 500.0) - 500.0;
            g = m * std::sin(std::sqrt(std::abs(m))) - (z + 500.0) * (z + 500.0) / (10000.0 * d);
        } else {
            g = schwefel_term(z);
        }
        f += kSchwefelPeak - g;
    }
    return f;
}

double expanded_schaffer_f6(std::span<const double> x)
{
    auto g = [](double a, double b) {
        const double r2 = a * a + b * b;
        const double s = std::sin(std::sqrt(r2));
        const double t = 1.0 + 0.001 * r2;
        return 0.5 + (s * s - 0.5) / (t * t);
    };
    double f = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        f += g(x[i], x[(i + 1) % x.size()]);
    return f;
}

Transform::Transform(Vector shift, Eigen::MatrixXd rotation) : shift_(std::move(shift)), rotation_(std::move(rotation))
{
    const auto d = static_cast<Eigen::Index>(shift_.size());
    if (rotation_.rows() != d || rotation_.cols() != d)
        throw Error(ErrorKind::Dimension, "rotation must be D x D");
    const double deviation = (rotation_.transpose() * rotation_ - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
    if (deviation > 1e-9)
        throw Error(ErrorKind::Domain, "rotation matrix is not orthogonal");
}

Transform Transform::identity(std::size_t dim)
{
    const auto d = static_cast<Eigen::Index>(dim);
    return Transform(Vector(dim, 0.0), Eigen::MatrixXd::Identity(d, d));
}

Transform Transform::random(std::size_t dim, std::uint64_t seed, double shift_range)
{
    RngStream rng(seed);
    Vector shift(dim);
    for (auto& o : shift)
        o = rng.uniform(-shift_range, shift_range);
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd gaussian(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r)
            gaussian(r, c) = rng.normal();
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index c = 0; c < d; ++c) {
        if (r(c, c) < 0.0)
            q.col(c) *= -1.0;
    }
    return Transform(std::move(shift), std::move(q));
}

Vector Transform::apply(std::span<const double> x) const
{
    if (x.size() != shift_.size())
        throw Error(ErrorKind::Dimension, "transform dimension mismatch");
    const auto d = static_cast<Eigen::Index>(x.size());
    Eigen::VectorXd diff(d);
    for (Eigen::Index j = 0; j < d; ++j)
        diff(j) = x[static_cast<std::size_t>(j)] - shift_[static_cast<std::size_t>(j)];
    const Eigen::VectorXd z = rotation_ * diff;
    return Vector(z.data(), z.data() + d);
}

Vector apply_transform(const Transform& t, std::span<const double> x)
{
    return t.apply(x);
}

Problem make_benchmark(const std::string& name, std::size_t dim)
{
    const Fn fn = lookup(name);
    if (dim == 0)
        throw Error(ErrorKind::Dimension, "benchmark dimension must be positive");
    return Problem(name, Bounds::uniform(dim, kDefaultLower, kDefaultUpper),
                   [fn](std::span<const double> x) { return fn(x); }, 0.0);
}

Problem make_transformed_benchmark(const std::string& name, std::size_t dim, std::uint64_t transform_seed)
{
    const Fn fn = lookup(name);
    if (dim == 0)
        throw Error(ErrorKind::Dimension, "benchmark dimension must be positive");
    auto transform = std::make_shared<const Transform>(Transform::random(dim, transform_seed));
    return Problem("sr-" + name, Bounds::uniform(dim, kDefaultLower, kDefaultUpper),
                   [fn, transform](std::span<const double> x) { return fn(transform->apply(x)); }, 0.0);
}

} // namespace embgo::bench
