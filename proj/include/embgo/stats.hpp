#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "embgo/core.hpp"

namespace embgo {

/// Mean normalized absolute deviation from the centroid, in [0, 1] for an
/// in-bounds population.
double population_diversity(const Population& pop, const Bounds& bounds);

namespace stats {

enum class Alternative {
    TwoSided,
    Less,    // a tends to be smaller than b
    Greater, // a tends to be larger than b
};

struct MannWhitney {
    double u = 0.0; // U for sample a: #(a > b) + 0.5 #(a == b)
    double p = 1.0;
    bool exact = false;
};

/// Pair-count limit (n_a * n_b) up to which the exact null distribution is used.
inline constexpr std::size_t kExactPairLimit = 64;

/// Rank-sum test with midranks. Exact permutation distribution (tie-aware) for
/// n_a * n_b <= 64, otherwise the normal approximation with tie-corrected
/// variance and continuity correction.
MannWhitney mann_whitney_u(std::span<const double> a, std::span<const double> b,
                           Alternative alt = Alternative::TwoSided);
MannWhitney mann_whitney_u_exact(std::span<const double> a, std::span<const double> b,
                                 Alternative alt = Alternative::TwoSided);
MannWhitney mann_whitney_u_normal(std::span<const double> a, std::span<const double> b,
                                  Alternative alt = Alternative::TwoSided);

/// Holm step-down adjustment, returned in input order.
std::vector<double> holm_adjust(std::span<const double> p_values);

/// Midranks, 1-based.
std::vector<double> midranks(std::span<const double> values);

double mean(std::span<const double> v);
double median(std::span<const double> v);
/// Sample standard deviation (n - 1); 0 for a single value.
double stddev(std::span<const double> v);

enum class Mark { Better, Equal, Worse }; // from the reference's point of view

/// "+", "≈" or "-".
std::string_view mark_symbol(Mark m);

/// Final fitness samples per (problem, algorithm).
class ComparisonMatrix {
public:
    ComparisonMatrix(std::vector<std::string> problems, std::vector<std::string> algorithms);

    const std::vector<std::string>& problems() const noexcept { return problems_; }
    const std::vector<std::string>& algorithms() const noexcept { return algorithms_; }

    void set_samples(std::size_t problem, std::size_t algorithm, std::vector<double> samples);
    const std::vector<double>& samples(std::size_t problem, std::size_t algorithm) const;
    double cell_mean(std::size_t problem, std::size_t algorithm) const;
    double cell_std(std::size_t problem, std::size_t algorithm) const;

    std::size_t algorithm_index(const std::string& name) const;

private:
    std::vector<std::string> problems_;
    std::vector<std::string> algorithms_;
    std::vector<std::vector<double>> cells_;
};

struct MarkTable {
    // marks[problem][algorithm]; the reference column holds Equal.
    std::vector<std::vector<Mark>> marks;
    std::size_t reference = 0;

    /// (+, ≈, -) totals for one competitor column.
    struct Counts {
        std::size_t better = 0, equal = 0, worse = 0;
    };
    Counts counts(std::size_t algorithm) const;
};

/// Two-sided Mann-Whitney of every competitor against the reference, Holm
/// corrected across the competitors of each problem. '+' means the reference
/// is significantly better (lower median).
MarkTable significance_marks(const ComparisonMatrix& matrix, std::size_t reference, double alpha = 0.05);

/// Per-problem midrank of each algorithm's mean (1 = lowest), averaged.
std::vector<double> average_rank(const ComparisonMatrix& matrix);

} // namespace stats
} // namespace embgo
