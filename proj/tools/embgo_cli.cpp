// Command-line front end for the experiment runner.
//
//   embgo run      --problem rastrigin --algorithm embgo --trials 30 --out results
//   embgo compare  --problem sphere --problem sr-bent-cigar --algorithm embgo --algorithm mbgo
//   embgo arnas    --table cifar10_pgd.csv --algorithm embgo
//   embgo table    --seed 7 --out table.csv     (writes a synthetic lookup table)
//
// Exit status: 0 success, 2 configuration error, 1 runtime error.

#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "embgo/arnas.hpp"
#include "embgo/error.hpp"
#include "embgo/experiment.hpp"

namespace {

using embgo::experiment::ExperimentConfig;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct CommonFlags {
    std::optional<std::size_t> pop;
    std::optional<std::size_t> budget;
    std::string out;
};

void add_common(CLI::App* cmd, ExperimentConfig& cfg, CommonFlags& flags)
{
    cmd->add_option("--problem", cfg.problems, "Problem name (repeatable)");
    cmd->add_option("--algorithm", cfg.algorithms, "embgo, mbgo, de, pso or random (repeatable)");
    cmd->add_option("--dim", cfg.dim, "Dimension of benchmark problems")->check(CLI::PositiveNumber);
    cmd->add_option("--pop", flags.pop, "Population size");
    cmd->add_option("--budget", flags.budget, "Fitness-evaluation budget");
    cmd->add_option("--trials", cfg.trials, "Independent trials per cell");
    cmd->add_option("--seed", cfg.seed, "Base seed; trial k uses seed + k");
    cmd->add_option("--out", flags.out, fmt::format("Output directory (default ${} or ./results)", embgo::experiment::kOutDirEnv));
    cmd->add_option("--param", cfg.params, "key=value or algorithm.key=value (repeatable)");
    cmd->add_option("--jobs", cfg.jobs, "Trials run concurrently")->check(CLI::PositiveNumber);
}

void apply(ExperimentConfig& cfg, const CommonFlags& flags)
{
    cfg.pop_size = flags.pop;
    cfg.budget = flags.budget;
    cfg.out_dir = flags.out;
}

bool is_config_error(embgo::ErrorKind kind)
{
    return kind == embgo::ErrorKind::InvalidConfiguration || kind == embgo::ErrorKind::Registry;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Battle-game optimizers and benchmark harness"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    CommonFlags flags;

    auto* run = app.add_subcommand("run", "Run trials and write traces plus a summary");
    add_common(run, cfg, flags);

    auto* compare = app.add_subcommand("compare", "Compare algorithms with significance marks and average ranks");
    add_common(compare, cfg, flags);
    compare->add_option("--reference", cfg.reference, "Reference algorithm label (default: first)");
    compare->add_option("--alpha", cfg.alpha, "Significance level");

    auto* arnas = app.add_subcommand("arnas", "Search a cell-encoding lookup table");
    add_common(arnas, cfg, flags);
    arnas->add_option("--table", cfg.table, "Lookup table file")->required();

    std::uint64_t table_seed = 1;
    std::string table_out;
    auto* table = app.add_subcommand("table", "Write a seeded synthetic lookup table");
    table->add_option("--seed", table_seed, "Generator seed");
    table->add_option("--out", table_out, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }
    apply(cfg, flags);

    try {
        if (run->parsed()) {
            const auto outcome = embgo::experiment::cmd_run(cfg);
            for (const auto& row : outcome.rows)
                std::cout << fmt::format("{:<12} {:<24} mean {:.6e}  std {:.6e}  best {:.6e}  worst {:.6e}\n",
                                         row.algorithm, row.problem, row.mean, row.std, row.best, row.worst);
            std::cout << "summary: " << outcome.summary_path.string() << '\n';
        } else if (compare->parsed()) {
            const auto outcome = embgo::experiment::cmd_compare(cfg);
            std::ifstream report(outcome.report_path);
            std::cout << report.rdbuf();
            std::cout << "report: " << outcome.report_path.string() << '\n';
        } else if (arnas->parsed()) {
            const auto o = embgo::experiment::cmd_arnas(cfg);
            std::cout << fmt::format("best {} accuracy {}  optimum {} accuracy {}  regret {}\n", o.best_code.str(),
                                     o.best_accuracy, o.optimum.code.str(), o.optimum.accuracy, o.regret);
            std::cout << "report: " << o.report_path.string() << '\n';
        } else if (table->parsed()) {
            embgo::arnas::save_table(table_out, embgo::arnas::synthetic_table(table_seed));
            std::cout << "wrote " << table_out << '\n';
        }
    } catch (const embgo::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_config_error(e.kind()) ? kExitConfig : kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}
