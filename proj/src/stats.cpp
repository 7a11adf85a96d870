#include "embgo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "embgo/error.hpp"

namespace embgo {

double population_diversity(const Population& pop, const Bounds& bounds)
{
    if (pop.empty())
        throw Error(ErrorKind::InvalidConfiguration, "diversity of an empty population");
    const std::size_t d = bounds.dim();
    const Vector mean = centroid(pop);
    if (mean.size() != d)
        throw Error(ErrorKind::Dimension, "population and bounds differ in dimension");
    double total = 0.0;
    for (const auto& member : pop) {
        for (std::size_t j = 0; j < d; ++j)
            total += std::abs(member.position[j] - mean[j]) / bounds.width(j);
    }
    return total / (static_cast<double>(pop.size()) * static_cast<double>(d));
}

namespace stats {

namespace {

void check_samples(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty())
        throw Error(ErrorKind::Domain, "Mann-Whitney U needs two non-empty samples");
}

struct Ranked {
    std::vector<double> ranks; // midranks of a followed by b
    double u = 0.0;
    double tie_term = 0.0; // sum of t^3 - t over tie groups
};

Ranked rank_pooled(std::span<const double> a, std::span<const double> b)
{
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    Ranked r;
    r.ranks = midranks(pooled);
    const double rank_sum = std::accumulate(r.ranks.begin(), r.ranks.begin() + static_cast<std::ptrdiff_t>(a.size()), 0.0);
    const auto na = static_cast<double>(a.size());
    r.u = rank_sum - na * (na + 1.0) / 2.0;

    std::sort(pooled.begin(), pooled.end());
    for (std::size_t i = 0; i < pooled.size();) {
        std::size_t j = i;
        while (j < pooled.size() && pooled[j] == pooled[i])
            ++j;
        const auto t = static_cast<double>(j - i);
        r.tie_term += t * t * t - t;
        i = j;
    }
    return r;
}

double normal_upper_tail(double z)
{
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

} // namespace

std::vector<double> midranks(std::span<const double> values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && values[order[j]] == values[order[i]])
            ++j;
        // Positions i..j-1 share the average of ranks i+1..j.
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            ranks[order[k]] = rank;
        i = j;
    }
    return ranks;
}

MannWhitney mann_whitney_u_exact(std::span<const double> a, std::span<const double> b, Alternative alt)
{
    check_samples(a, b);
    const Ranked ranked = rank_pooled(a, b);
    const std::size_t na = a.size();
    const std::size_t n = na + b.size();

    // Doubled midranks are integers; count size-na subsets by doubled rank sum.
    std::vector<long> doubled(n);
    for (std::size_t i = 0; i < n; ++i)
        doubled[i] = std::lround(2.0 * ranked.ranks[i]);
    const long max_sum = std::accumulate(doubled.begin(), doubled.end(), 0L);
    std::vector<std::vector<double>> ways(na + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t item = 0; item < n; ++item) {
        const auto w = static_cast<std::size_t>(doubled[item]);
        for (std::size_t k = std::min(item + 1, na); k >= 1; --k) {
            auto& row = ways[k];
            const auto& prev = ways[k - 1];
            for (std::size_t s = static_cast<std::size_t>(max_sum); s >= w; --s) {
                row[s] += prev[s - w];
                if (s == w)
                    break;
            }
        }
    }

    const long observed = std::accumulate(doubled.begin(), doubled.begin() + static_cast<std::ptrdiff_t>(na), 0L);
    const long centre2 = static_cast<long>(na * (n + 1)); // doubled mean rank sum
    const long observed_gap = std::labs(observed - centre2);
    double total = 0.0, tail = 0.0;
    for (long s = 0; s <= max_sum; ++s) {
        const double count = ways[na][static_cast<std::size_t>(s)];
        if (count == 0.0)
            continue;
        total += count;
        bool in_tail = false;
        switch (alt) {
        case Alternative::TwoSided: in_tail = std::labs(s - centre2) >= observed_gap; break;
        case Alternative::Less: in_tail = s <= observed; break;
        case Alternative::Greater: in_tail = s >= observed; break;
        }
        if (in_tail)
            tail += count;
    }
    return MannWhitney{ranked.u, std::min(1.0, tail / total), true};
}

MannWhitney mann_whitney_u_normal(std::span<const double> a, std::span<const double> b, Alternative alt)
{
    check_samples(a, b);
    const Ranked ranked = rank_pooled(a, b);
    const auto na = static_cast<double>(a.size());
    const auto nb = static_cast<double>(b.size());
    const double n = na + nb;
    const double mu = na * nb / 2.0;
    const double tie_adjust = n > 1.0 ? ranked.tie_term / (n * (n - 1.0)) : 0.0;
    const double variance = na * nb / 12.0 * ((n + 1.0) - tie_adjust);
    MannWhitney out{ranked.u, 1.0, false};
    if (!(variance > 0.0))
        return out;
    const double sd = std::sqrt(variance);
    const double gap = ranked.u - mu;
    switch (alt) {
    case Alternative::TwoSided: out.p = 2.0 * normal_upper_tail(std::max(std::abs(gap) - 0.5, 0.0) / sd); break;
    case Alternative::Less: out.p = normal_upper_tail(-(gap + 0.5) / sd); break;
    case Alternative::Greater: out.p = normal_upper_tail((gap - 0.5) / sd); break;
    }
    out.p = std::min(1.0, out.p);
    return out;
}

MannWhitney mann_whitney_u(std::span<const double> a, std::span<const double> b, Alternative alt)
{
    check_samples(a, b);
    if (a.size() * b.size() <= kExactPairLimit)
        return mann_whitney_u_exact(a, b, alt);
    return mann_whitney_u_normal(a, b, alt);
}

std::vector<double> holm_adjust(std::span<const double> p_values)
{
    for (double p : p_values) {
        if (!(p >= 0.0 && p <= 1.0))
            throw Error(ErrorKind::Domain, fmt::format("p-value {} outside [0, 1]", p));
    }
    const std::size_t m = p_values.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return p_values[x] < p_values[y]; });
    std::vector<double> adjusted(m);
    double running = 0.0;
    for (std::size_t rank = 0; rank < m; ++rank) {
        const std::size_t i = order[rank];
        running = std::max(running, std::min(1.0, static_cast<double>(m - rank) * p_values[i]));
        adjusted[i] = running;
    }
    return adjusted;
}

double mean(std::span<const double> v)
{
    if (v.empty())
        throw Error(ErrorKind::Data, "mean of an empty sample");
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double median(std::span<const double> v)
{
    if (v.empty())
        throw Error(ErrorKind::Data, "median of an empty sample");
    std::vector<double> s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    const std::size_t h = s.size() / 2;
    return s.size() % 2 == 1 ? s[h] : 0.5 * (s[h - 1] + s[h]);
}

double stddev(std::span<const double> v)
{
    if (v.size() < 2)
        return 0.0;
    const double m = mean(v);
    double ss = 0.0;
    for (double x : v)
        ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

std::string_view mark_symbol(Mark m)
{
    switch (m) {
    case Mark::Better: return "+";
    case Mark::Worse: return "-";
    case Mark::Equal: break;
    }
    return "≈";
}

ComparisonMatrix::ComparisonMatrix(std::vector<std::string> problems, std::vector<std::string> algorithms)
    : problems_(std::move(problems)), algorithms_(std::move(algorithms)), cells_(problems_.size() * algorithms_.size())
{
    if (algorithms_.size() < 2)
        throw Error(ErrorKind::InvalidConfiguration, "a comparison needs at least two algorithms");
    if (problems_.empty())
        throw Error(ErrorKind::InvalidConfiguration, "a comparison needs at least one problem");
}

void ComparisonMatrix::set_samples(std::size_t problem, std::size_t algorithm, std::vector<double> samples)
{
    cells_.at(problem * algorithms_.size() + algorithm) = std::move(samples);
}

const std::vector<double>& ComparisonMatrix::samples(std::size_t problem, std::size_t algorithm) const
{
    const auto& cell = cells_.at(problem * algorithms_.size() + algorithm);
    if (cell.empty())
        throw Error(ErrorKind::Data, fmt::format("no samples for {} on {}", algorithms_.at(algorithm), problems_.at(problem)));
    return cell;
}

double ComparisonMatrix::cell_mean(std::size_t problem, std::size_t algorithm) const
{
    return mean(samples(problem, algorithm));
}

double ComparisonMatrix::cell_std(std::size_t problem, std::size_t algorithm) const
{
    return stddev(samples(problem, algorithm));
}

std::size_t ComparisonMatrix::algorithm_index(const std::string& name) const
{
    const auto it = std::find(algorithms_.begin(), algorithms_.end(), name);
    if (it == algorithms_.end())
        throw Error(ErrorKind::Registry, fmt::format("algorithm '{}' is not a column of the comparison", name));
    return static_cast<std::size_t>(it - algorithms_.begin());
}

MarkTable::Counts MarkTable::counts(std::size_t algorithm) const
{
    Counts c;
    for (const auto& row : marks) {
        switch (row.at(algorithm)) {
        case Mark::Better: ++c.better; break;
        case Mark::Equal: ++c.equal; break;
        case Mark::Worse: ++c.worse; break;
        }
    }
    return c;
}

MarkTable significance_marks(const ComparisonMatrix& matrix, std::size_t reference, double alpha)
{
    const std::size_t k = matrix.algorithms().size();
    if (reference >= k)
        throw Error(ErrorKind::Registry, "reference column out of range");
    MarkTable table;
    table.reference = reference;
    for (std::size_t p = 0; p < matrix.problems().size(); ++p) {
        const auto& ref = matrix.samples(p, reference);
        std::vector<double> raw;
        std::vector<std::size_t> columns;
        for (std::size_t a = 0; a < k; ++a) {
            if (a == reference)
                continue;
            raw.push_back(mann_whitney_u(ref, matrix.samples(p, a)).p);
            columns.push_back(a);
        }
        const std::vector<double> adjusted = holm_adjust(raw);
        std::vector<Mark> row(k, Mark::Equal);
        const double ref_median = median(ref);
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (adjusted[c] >= alpha)
                continue;
            const double other = median(matrix.samples(p, columns[c]));
            if (ref_median < other)
                row[columns[c]] = Mark::Better;
            else if (ref_median > other)
                row[columns[c]] = Mark::Worse;
        }
        table.marks.push_back(std::move(row));
    }
    return table;
}

std::vector<double> average_rank(const ComparisonMatrix& matrix)
{
    const std::size_t k = matrix.algorithms().size();
    std::vector<double> total(k, 0.0);
    for (std::size_t p = 0; p < matrix.problems().size(); ++p) {
        std::vector<double> means(k);
        for (std::size_t a = 0; a < k; ++a)
            means[a] = matrix.cell_mean(p, a);
        const std::vector<double> ranks = midranks(means);
        for (std::size_t a = 0; a < k; ++a)
            total[a] += ranks[a];
    }
    for (auto& t : total)
        t /= static_cast<double>(matrix.problems().size());
    return total;
}

} // namespace stats
} // namespace embgo
