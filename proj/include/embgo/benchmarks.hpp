#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "embgo/core.hpp"
#include "embgo/problem.hpp"

namespace embgo::bench {

/// Names accepted by evaluate_benchmark, in registry order.
const std::vector<std::string>& benchmark_names();
bool is_benchmark(std::string_view name);

/// Raw function value. Every function has global minimum 0 at the origin.
double evaluate_benchmark(std::string_view name, std::span<const double> x);

double sphere(std::span<const double> x);
double bent_cigar(std::span<const double> x);
double zakharov(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double rastrigin(std::span<const double> x);
double ackley(std::span<const double> x);
double griewank(std::span<const double> x);
double levy(std::span<const double> x);
double schwefel(std::span<const double> x);
double expanded_schaffer_f6(std::span<const double> x);

/// x -> M (x - o) with M orthogonal.
class Transform {
public:
    /// Throws Domain when M^T M deviates from I by more than 1e-9.
    Transform(Vector shift, Eigen::MatrixXd rotation);

    static Transform identity(std::size_t dim);
    /// Shift uniform in [-shift_range, shift_range]^D, rotation Haar-distributed
    /// (QR of a Gaussian matrix with the sign of diag(R) folded into Q).
    static Transform random(std::size_t dim, std::uint64_t seed, double shift_range = 80.0);

    std::size_t dim() const noexcept { return shift_.size(); }
    const Vector& shift() const noexcept { return shift_; }
    const Eigen::MatrixXd& rotation() const noexcept { return rotation_; }

    Vector apply(std::span<const double> x) const;

private:
    Vector shift_;
    Eigen::MatrixXd rotation_;
};

Vector apply_transform(const Transform& t, std::span<const double> x);

inline constexpr double kDefaultLower = -100.0;
inline constexpr double kDefaultUpper = 100.0;
inline constexpr std::uint64_t kDefaultTransformSeed = 20240101;

/// Problem for a raw benchmark on [-100, 100]^D.
Problem make_benchmark(const std::string& name, std::size_t dim);
/// Shifted and rotated variant; named "sr-<name>".
Problem make_transformed_benchmark(const std::string& name, std::size_t dim,
                                   std::uint64_t transform_seed = kDefaultTransformSeed);

} // namespace embgo::bench
