#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "embgo/arnas.hpp"
#include "embgo/core.hpp"
#include "embgo/problem.hpp"
#include "embgo/random.hpp"
#include "embgo/stats.hpp"

namespace embgo::experiment {

/// Environment variable consulted when no output directory is given.
inline constexpr const char* kOutDirEnv = "EMBGO_OUT_DIR";

using Runner = std::function<RunResult(const Problem&, const OptimizerConfig&, Random&)>;

/// One algorithm column: registry name plus its resolved overrides.
struct AlgorithmSpec {
    std::string name;
    std::string label; // unique within an experiment
    std::map<std::string, std::string> params;
    std::optional<std::size_t> pop_size; // per-algorithm "pop" override
    std::optional<std::size_t> budget;   // per-algorithm "budget" override
};

/// Registry names: embgo, mbgo, de, pso, random.
const std::vector<std::string>& algorithm_names();

/// Builds a runner, validating every parameter key and value.
/// Keys: embgo{delta_low,delta_high,beta,shared_r}, mbgo{delta_low,delta_high,movement,battle},
/// de{F,Cr}, pso{w,c1,c2,v_max}; every algorithm also accepts pop and budget.
Runner make_runner(const AlgorithmSpec& spec);

/// Raw benchmark names, "sr-<benchmark>" for shifted/rotated variants, and
/// "three-bar-truss" (fixed dimension 2).
Problem make_problem(const std::string& name, std::size_t dim);

struct ExperimentConfig {
    std::vector<std::string> problems;
    std::vector<std::string> algorithms;
    /// "key=value" (all algorithms) or "algorithm.key=value" (scoped).
    std::vector<std::string> params;
    std::size_t dim = 10;
    std::optional<std::size_t> pop_size;
    std::optional<std::size_t> budget;
    std::size_t trials = 30;
    std::uint64_t seed = 1;
    std::filesystem::path out_dir;
    std::size_t jobs = 1;
    std::string reference;          // compare
    std::filesystem::path table;    // arnas
    double alpha = 0.05;
};

/// Splits the raw parameter list onto the algorithm columns. Duplicate
/// algorithms get labels "name#2", "name#3", ... Throws InvalidConfiguration.
std::vector<AlgorithmSpec> resolve_algorithms(const ExperimentConfig& config);

/// Population size and budget for one (algorithm, problem) cell. Defaults:
/// pop 100; budget 10,000 for the truss, 1000 * D otherwise.
OptimizerConfig cell_config(const AlgorithmSpec& spec, const ExperimentConfig& config, const Problem& problem);

/// Independent seeded trials; trial k uses seed base + k. Results are ordered
/// by trial index whatever `jobs` is.
std::vector<RunResult> run_trials(const Problem& problem, const Runner& runner, const OptimizerConfig& base,
                                  std::size_t trials, std::size_t jobs = 1);

/// Plain-text CSV form of a run: "fes,best_fitness,diversity" rows after a
/// comment block. Byte-identical for identical runs.
void write_trace(std::ostream& out, const RunResult& result, const std::vector<std::pair<std::string, std::string>>& header);
std::string serialize(const RunResult& result);

struct SummaryRow {
    std::string algorithm;
    std::string problem;
    std::size_t samples = 0;
    double mean = 0.0, std = 0.0, best = 0.0, worst = 0.0;
};

SummaryRow summarize(const std::string& algorithm, const std::string& problem, const std::vector<RunResult>& runs);

struct RunOutcome {
    std::vector<SummaryRow> rows;
    std::filesystem::path summary_path;
    std::vector<std::filesystem::path> trace_paths;
};

struct CompareOutcome {
    stats::ComparisonMatrix matrix;
    stats::MarkTable marks;
    std::vector<double> average_ranks;
    std::filesystem::path report_path;
};

struct ArnasOutcome {
    arnas::ArchCode best_code;
    double best_accuracy = 0.0;
    arnas::TableOptimum optimum;
    double regret = 0.0;
    std::size_t pop_size = 0;
    std::size_t budget = 0;
    RunResult run;
    std::filesystem::path report_path;
};

RunOutcome cmd_run(const ExperimentConfig& config);
CompareOutcome cmd_compare(const ExperimentConfig& config);
ArnasOutcome cmd_arnas(const ExperimentConfig& config);

/// Resolved output directory: explicit value, else $EMBGO_OUT_DIR, else "results".
std::filesystem::path output_dir(const ExperimentConfig& config);

} // namespace embgo::experiment
