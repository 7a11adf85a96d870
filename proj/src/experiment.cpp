#include "embgo/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "embgo/baselines.hpp"
#include "embgo/benchmarks.hpp"
#include "embgo/constrained.hpp"
#include "embgo/embgo.hpp"
#include "embgo/error.hpp"
#include "embgo/mbgo.hpp"

namespace embgo::experiment {

namespace {

using Header = std::vector<std::pair<std::string, std::string>>;

const std::map<std::string, std::set<std::string>>& known_keys()
{
    static const std::map<std::string, std::set<std::string>> keys = {
        {"embgo", {"delta_low", "delta_high", "beta", "shared_r"}},
        {"mbgo", {"delta_low", "delta_high", "movement", "battle"}},
        {"de", {"F", "Cr"}},
        {"pso", {"w", "c1", "c2", "v_max"}},
        {"random", {}},
    };
    return keys;
}

bool accepts(const std::string& algorithm, const std::string& key)
{
    if (key == "pop" || key == "budget")
        return true;
    const auto& keys = known_keys().at(algorithm);
    return keys.contains(key);
}

double to_double(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size())
        throw Error(ErrorKind::InvalidConfiguration, fmt::format("parameter {}: '{}' is not a number", key, value));
    return out;
}

std::size_t to_count(const std::string& key, const std::string& value)
{
    const double v = to_double(key, value);
    if (!(v >= 0.0) || v != static_cast<double>(static_cast<std::size_t>(v)))
        throw Error(ErrorKind::InvalidConfiguration, fmt::format("parameter {}: '{}' is not a count", key, value));
    return static_cast<std::size_t>(v);
}

bool to_bool(const std::string& key, const std::string& value)
{
    if (value == "1" || value == "true" || value == "on")
        return true;
    if (value == "0" || value == "false" || value == "off")
        return false;
    throw Error(ErrorKind::InvalidConfiguration, fmt::format("parameter {}: '{}' is not a boolean", key, value));
}

std::string fmt_real(double v)
{
    return fmt::format("{:.17g}", v);
}

std::filesystem::path prepare_dir(const ExperimentConfig& config)
{
    const auto dir = output_dir(config);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw Error(ErrorKind::Data, fmt::format("cannot create output directory '{}': {}", dir.string(), ec.message()));
    return dir;
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::Data, fmt::format("cannot write '{}'", path.string()));
    return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += sep;
        out += items[i];
    }
    return out;
}

std::string describe(const AlgorithmSpec& spec)
{
    std::vector<std::string> parts;
    for (const auto& [k, v] : spec.params)
        parts.push_back(k + "=" + v);
    if (spec.pop_size)
        parts.push_back(fmt::format("pop={}", *spec.pop_size));
    if (spec.budget)
        parts.push_back(fmt::format("budget={}", *spec.budget));
    return parts.empty() ? spec.label : fmt::format("{}({})", spec.label, join(parts, ";"));
}

Header config_header(std::string_view command, const ExperimentConfig& config, const std::vector<AlgorithmSpec>& specs)
{
    std::vector<std::string> algs;
    for (const auto& s : specs)
        algs.push_back(describe(s));
    Header h = {
        {"command", std::string(command)},
        {"problems", join(config.problems, " ")},
        {"algorithms", join(algs, " ")},
        {"dim", std::to_string(config.dim)},
        {"pop", config.pop_size ? std::to_string(*config.pop_size) : "default"},
        {"budget", config.budget ? std::to_string(*config.budget) : "default"},
        {"trials", std::to_string(config.trials)},
        {"seed", std::to_string(config.seed)},
    };
    return h;
}

void write_header(std::ostream& out, const Header& header)
{
    for (const auto& [k, v] : header)
        out << "# " << k << ": " << v << '\n';
}

void check_trials(const ExperimentConfig& config)
{
    if (config.trials < 1)
        throw Error(ErrorKind::InvalidConfiguration, "trial count must be at least 1");
    if (config.problems.empty())
        throw Error(ErrorKind::InvalidConfiguration, "no problem given");
}

std::string sanitize(std::string s)
{
    for (auto& c : s) {
        if (c == '#' || c == '/' || c == ' ')
            c = '_';
    }
    return s;
}

} // namespace

const std::vector<std::string>& algorithm_names()
{
    static const std::vector<std::string> names = {"embgo", "mbgo", "de", "pso", "random"};
    return names;
}

Runner make_runner(const AlgorithmSpec& spec)
{
    if (!known_keys().contains(spec.name))
        throw Error(ErrorKind::Registry, fmt::format("algorithm '{}' (known: {})", spec.name, join(algorithm_names(), ", ")));
    for (const auto& [k, v] : spec.params) {
        if (!accepts(spec.name, k))
            throw Error(ErrorKind::InvalidConfiguration, fmt::format("{} has no parameter '{}'", spec.name, k));
    }
    auto real = [&](const std::string& key, double fallback) {
        const auto it = spec.params.find(key);
        return it == spec.params.end() ? fallback : to_double(key, it->second);
    };
    auto flag = [&](const std::string& key, bool fallback) {
        const auto it = spec.params.find(key);
        return it == spec.params.end() ? fallback : to_bool(key, it->second);
    };

    if (spec.name == "embgo") {
        EmbgoParams p;
        p.delta_low = real("delta_low", p.delta_low);
        p.delta_high = real("delta_high", p.delta_high);
        p.beta = real("beta", p.beta);
        p.shared_mutation_coefficient = flag("shared_r", p.shared_mutation_coefficient);
        p.validate();
        return [p](const Problem& prob, const OptimizerConfig& c, Random& rng) { return run_embgo(prob, c, rng, p); };
    }
    if (spec.name == "mbgo") {
        MbgoParams p;
        p.delta_low = real("delta_low", p.delta_low);
        p.delta_high = real("delta_high", p.delta_high);
        p.movement_phase = flag("movement", p.movement_phase);
        p.battle_phase = flag("battle", p.battle_phase);
        p.validate();
        return [p](const Problem& prob, const OptimizerConfig& c, Random& rng) { return run_mbgo(prob, c, rng, p); };
    }
    if (spec.name == "de") {
        DeParams p;
        p.F = real("F", p.F);
        p.Cr = real("Cr", p.Cr);
        p.validate();
        return [p](const Problem& prob, const OptimizerConfig& c, Random& rng) { return run_de(prob, c, rng, p); };
    }
    if (spec.name == "pso") {
        PsoParams p;
        p.w = real("w", p.w);
        p.c1 = real("c1", p.c1);
        p.c2 = real("c2", p.c2);
        p.v_max = real("v_max", p.v_max);
        p.validate();
        return [p](const Problem& prob, const OptimizerConfig& c, Random& rng) { return run_pso(prob, c, rng, p); };
    }
    return [](const Problem& prob, const OptimizerConfig& c, Random& rng) { return run_random_search(prob, c, rng); };
}

Problem make_problem(const std::string& name, std::size_t dim)
{
    if (name == "three-bar-truss")
        return make_three_bar_truss();
    if (bench::is_benchmark(name))
        return bench::make_benchmark(name, dim);
    if (name.starts_with("sr-") && bench::is_benchmark(name.substr(3)))
        return bench::make_transformed_benchmark(name.substr(3), dim);
    throw Error(ErrorKind::Registry, fmt::format("problem '{}' (known: {}, sr-<benchmark>, three-bar-truss)", name,
                                                 join(bench::benchmark_names(), ", ")));
}

std::vector<AlgorithmSpec> resolve_algorithms(const ExperimentConfig& config)
{
    if (config.algorithms.empty())
        throw Error(ErrorKind::InvalidConfiguration, "no algorithm given");
    std::vector<AlgorithmSpec> specs;
    std::map<std::string, int> seen;
    for (const auto& name : config.algorithms) {
        if (!known_keys().contains(name))
            throw Error(ErrorKind::Registry, fmt::format("algorithm '{}' (known: {})", name, join(algorithm_names(), ", ")));
        const int count = ++seen[name];
        specs.push_back({name, count == 1 ? name : fmt::format("{}#{}", name, count), {}, {}, {}});
    }

    auto assign = [](AlgorithmSpec& spec, const std::string& key, const std::string& value) {
        if (key == "pop")
            spec.pop_size = to_count(key, value);
        else if (key == "budget")
            spec.budget = to_count(key, value);
        else
            spec.params[key] = value;
    };

    for (const auto& raw : config.params) {
        const auto eq = raw.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorKind::InvalidConfiguration, fmt::format("parameter '{}' is not key=value", raw));
        std::string key = raw.substr(0, eq);
        const std::string value = raw.substr(eq + 1);
        std::string scope;
        if (const auto dot = key.find('.'); dot != std::string::npos) {
            scope = key.substr(0, dot);
            key = key.substr(dot + 1);
        }
        bool applied = false;
        for (auto& spec : specs) {
            if (!scope.empty() && scope != spec.name && scope != spec.label)
                continue;
            if (!accepts(spec.name, key)) {
                if (!scope.empty())
                    throw Error(ErrorKind::InvalidConfiguration, fmt::format("{} has no parameter '{}'", spec.label, key));
                continue;
            }
            assign(spec, key, value);
            applied = true;
        }
        if (!applied)
            throw Error(ErrorKind::InvalidConfiguration, fmt::format("parameter '{}' matches no selected algorithm", raw));
    }
    for (const auto& spec : specs)
        make_runner(spec); // validates values
    return specs;
}

OptimizerConfig cell_config(const AlgorithmSpec& spec, const ExperimentConfig& config, const Problem& problem)
{
    OptimizerConfig c;
    c.pop_size = spec.pop_size.value_or(config.pop_size.value_or(100));
    const std::size_t default_budget = problem.name() == "three-bar-truss" ? 10000 : 1000 * problem.dim();
    c.max_fes = spec.budget.value_or(config.budget.value_or(default_budget));
    c.seed = config.seed;
    if (spec.name != "random" && c.max_fes < c.pop_size)
        throw Error(ErrorKind::InvalidConfiguration,
                    fmt::format("{}: budget {} is smaller than the population {}", spec.label, c.max_fes, c.pop_size));
    if (c.max_fes < 1)
        throw Error(ErrorKind::InvalidConfiguration, "budget must be at least 1");
    return c;
}

std::vector<RunResult> run_trials(const Problem& problem, const Runner& runner, const OptimizerConfig& base,
                                  std::size_t trials, std::size_t jobs)
{
    std::vector<RunResult> results(trials);
    auto run_one = [&](std::size_t k) {
        OptimizerConfig c = base;
        c.seed = trial_seed(base.seed, k);
        RngStream rng(c.seed);
        results[k] = runner(problem, c, rng);
    };
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(trials, 1));
    if (jobs == 1) {
        for (std::size_t k = 0; k < trials; ++k)
            run_one(k);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(trials);
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (std::size_t k = next++; k < trials; k = next++) {
                try {
                    run_one(k);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : workers)
        t.join();
    for (const auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }
    return results;
}

void write_trace(std::ostream& out, const RunResult& result, const Header& header)
{
    write_header(out, header);
    out << "# trial_seed: " << result.seed << '\n';
    out << "# fes_used: " << result.fes_used << '\n';
    out << "# best_fitness: " << fmt_real(result.best.fitness.value_or(0.0)) << '\n';
    std::vector<std::string> pos;
    for (double x : result.best.position)
        pos.push_back(fmt_real(x));
    out << "# best_position: " << join(pos, " ") << '\n';
    out << "fes,best_fitness,diversity\n";
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
        out << result.trace[i].fes << ',' << fmt_real(result.trace[i].best_fitness) << ',';
        if (i < result.diversity_trace.size())
            out << fmt_real(result.diversity_trace[i].diversity);
        out << '\n';
    }
}

std::string serialize(const RunResult& result)
{
    std::ostringstream out;
    write_trace(out, result, {});
    return out.str();
}

SummaryRow summarize(const std::string& algorithm, const std::string& problem, const std::vector<RunResult>& runs)
{
    std::vector<double> finals;
    for (const auto& r : runs)
        finals.push_back(r.best.fitness.value());
    SummaryRow row{algorithm, problem, finals.size(), stats::mean(finals), stats::stddev(finals),
                   *std::min_element(finals.begin(), finals.end()), *std::max_element(finals.begin(), finals.end())};
    return row;
}

std::filesystem::path output_dir(const ExperimentConfig& config)
{
    if (!config.out_dir.empty())
        return config.out_dir;
    if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0')
        return env;
    return "results";
}

RunOutcome cmd_run(const ExperimentConfig& config)
{
    check_trials(config);
    const auto specs = resolve_algorithms(config);
    std::vector<Problem> problems;
    for (const auto& name : config.problems)
        problems.push_back(make_problem(name, config.dim));
    const Header header = config_header("run", config, specs);
    const auto dir = prepare_dir(config);

    RunOutcome outcome;
    std::ostringstream summary;
    write_header(summary, header);
    summary << "algorithm,problem,dim,pop,budget,samples,mean,std,best,worst\n";
    for (const auto& problem : problems) {
        for (const auto& spec : specs) {
            const OptimizerConfig base = cell_config(spec, config, problem);
            const auto runs = run_trials(problem, make_runner(spec), base, config.trials, config.jobs);
            for (std::size_t k = 0; k < runs.size(); ++k) {
                const auto path = dir / fmt::format("trace_{}_{}_t{:03}.csv", sanitize(spec.label), problem.name(), k);
                auto out = open_output(path);
                Header h = header;
                h.emplace_back("cell", fmt::format("{} on {} (pop {}, budget {})", describe(spec), problem.name(),
                                                   base.pop_size, base.max_fes));
                h.emplace_back("trial", std::to_string(k));
                write_trace(out, runs[k], h);
                outcome.trace_paths.push_back(path);
            }
            SummaryRow row = summarize(spec.label, problem.name(), runs);
            summary << fmt::format("{},{},{},{},{},{},{:.12e},{:.12e},{:.12e},{:.12e}\n", row.algorithm, row.problem,
                                   problem.dim(), base.pop_size, base.max_fes, row.samples, row.mean, row.std, row.best,
                                   row.worst);
            outcome.rows.push_back(std::move(row));
        }
    }
    outcome.summary_path = dir / "summary.csv";
    auto out = open_output(outcome.summary_path);
    out << summary.str();
    return outcome;
}

CompareOutcome cmd_compare(const ExperimentConfig& config)
{
    check_trials(config);
    const auto specs = resolve_algorithms(config);
    if (specs.size() < 2)
        throw Error(ErrorKind::InvalidConfiguration, "compare needs at least two algorithms");
    std::vector<Problem> problems;
    for (const auto& name : config.problems)
        problems.push_back(make_problem(name, config.dim));

    std::vector<std::string> labels;
    for (const auto& s : specs)
        labels.push_back(s.label);
    std::vector<std::string> problem_names;
    for (const auto& p : problems)
        problem_names.push_back(p.name());

    // Unequal budgets would make the comparison meaningless.
    for (const auto& problem : problems) {
        const std::size_t first = cell_config(specs.front(), config, problem).max_fes;
        for (const auto& spec : specs) {
            const std::size_t b = cell_config(spec, config, problem).max_fes;
            if (b != first)
                throw Error(ErrorKind::InvalidConfiguration,
                            fmt::format("unequal budgets on {}: {} has {}, {} has {}", problem.name(),
                                        specs.front().label, first, spec.label, b));
        }
    }

    std::size_t reference = 0;
    if (!config.reference.empty()) {
        const auto it = std::find(labels.begin(), labels.end(), config.reference);
        if (it == labels.end())
            throw Error(ErrorKind::InvalidConfiguration,
                        fmt::format("reference '{}' is not among the algorithms ({})", config.reference, join(labels, ", ")));
        reference = static_cast<std::size_t>(it - labels.begin());
    }

    stats::ComparisonMatrix matrix(problem_names, labels);
    for (std::size_t p = 0; p < problems.size(); ++p) {
        for (std::size_t a = 0; a < specs.size(); ++a) {
            const OptimizerConfig base = cell_config(specs[a], config, problems[p]);
            const auto runs = run_trials(problems[p], make_runner(specs[a]), base, config.trials, config.jobs);
            std::vector<double> finals;
            for (const auto& r : runs)
                finals.push_back(r.best.fitness.value());
            matrix.set_samples(p, a, std::move(finals));
        }
    }
    stats::MarkTable marks = stats::significance_marks(matrix, reference, config.alpha);
    std::vector<double> ranks = stats::average_rank(matrix);

    const auto dir = prepare_dir(config);
    Header header = config_header("compare", config, specs);
    header.emplace_back("reference", labels[reference]);
    header.emplace_back("alpha", fmt_real(config.alpha));
    header.emplace_back("test", "two-sided Mann-Whitney U, Holm-corrected per problem");

    // Aligned table in the shape of the usual mean/std/marks report.
    std::ostringstream report;
    write_header(report, header);
    report << "# marks: + reference significantly better, ≈ no significant difference, - reference significantly worse\n";
    constexpr int kCol = 16;
    report << fmt::format("{:<20}{:<6}", "problem", "");
    for (const auto& l : labels)
        report << fmt::format("{:>{}}", l + "  ", kCol);
    report << '\n';
    for (std::size_t p = 0; p < problems.size(); ++p) {
        report << fmt::format("{:<20}{:<6}", problem_names[p], "mean");
        for (std::size_t a = 0; a < labels.size(); ++a) {
            const std::string mark = a == reference ? "  " : " " + std::string(stats::mark_symbol(marks.marks[p][a]));
            report << fmt::format("{:>{}}", fmt::format("{:.3e}{}", matrix.cell_mean(p, a), mark), kCol);
        }
        report << '\n' << fmt::format("{:<20}{:<6}", "", "std");
        for (std::size_t a = 0; a < labels.size(); ++a)
            report << fmt::format("{:>{}}", fmt::format("{:.3e}  ", matrix.cell_std(p, a)), kCol);
        report << '\n';
    }
    report << fmt::format("{:<26}", "+/≈/-");
    for (std::size_t a = 0; a < labels.size(); ++a) {
        if (a == reference) {
            report << fmt::format("{:>{}}", "-  ", kCol);
            continue;
        }
        const auto c = marks.counts(a);
        report << fmt::format("{:>{}}", fmt::format("{}/{}/{}  ", c.better, c.equal, c.worse), kCol);
    }
    report << '\n' << fmt::format("{:<26}", "Avg. rank");
    for (double r : ranks)
        report << fmt::format("{:>{}}", fmt::format("{:.2f}  ", r), kCol);
    report << '\n';

    CompareOutcome outcome{std::move(matrix), std::move(marks), std::move(ranks), dir / "compare_report.txt"};
    auto out = open_output(outcome.report_path);
    out << report.str();

    auto samples = open_output(dir / "compare_samples.csv");
    write_header(samples, header);
    samples << "problem,algorithm,trial,final_fitness\n";
    for (std::size_t p = 0; p < problem_names.size(); ++p) {
        for (std::size_t a = 0; a < labels.size(); ++a) {
            const auto& s = outcome.matrix.samples(p, a);
            for (std::size_t k = 0; k < s.size(); ++k)
                samples << problem_names[p] << ',' << labels[a] << ',' << k << ',' << fmt_real(s[k]) << '\n';
        }
    }
    return outcome;
}

ArnasOutcome cmd_arnas(const ExperimentConfig& config)
{
    if (config.table.empty())
        throw Error(ErrorKind::InvalidConfiguration, "arnas needs --table");
    ExperimentConfig c = config;
    if (c.algorithms.empty())
        c.algorithms = {"embgo"};
    if (c.algorithms.size() != 1)
        throw Error(ErrorKind::InvalidConfiguration, "arnas runs exactly one algorithm");
    const auto specs = resolve_algorithms(c);
    const arnas::LookupTable table = arnas::load_table(c.table);
    if (!table.complete())
        throw Error(ErrorKind::IncompleteTable, fmt::format("{}: {} of {} codes present", c.table.string(), table.size(),
                                                            arnas::kCodeCount));
    const Problem problem = arnas::make_lookup_problem(table);

    OptimizerConfig base;
    base.pop_size = specs.front().pop_size.value_or(c.pop_size.value_or(50));
    base.max_fes = specs.front().budget.value_or(c.budget.value_or(5000));
    base.seed = c.seed;
    if (base.max_fes < base.pop_size)
        throw Error(ErrorKind::InvalidConfiguration, "budget is smaller than the population");

    RngStream rng(base.seed);
    ArnasOutcome outcome;
    outcome.run = make_runner(specs.front())(problem, base, rng);
    outcome.best_code = arnas::decode(outcome.run.best.position);
    outcome.best_accuracy = *table.get(outcome.best_code);
    outcome.optimum = arnas::brute_force_optimum(table);
    outcome.regret = outcome.optimum.accuracy - outcome.best_accuracy;
    outcome.pop_size = base.pop_size;
    outcome.budget = base.max_fes;

    const auto dir = prepare_dir(c);
    Header header = {
        {"command", "arnas"},
        {"table", c.table.string()},
        {"dataset", table.dataset},
        {"attack", table.attack},
        {"algorithm", describe(specs.front())},
        {"pop", std::to_string(base.pop_size)},
        {"budget", std::to_string(base.max_fes)},
        {"seed", std::to_string(base.seed)},
    };
    outcome.report_path = dir / "arnas_report.txt";
    auto report = open_output(outcome.report_path);
    write_header(report, header);
    std::vector<std::string> ops;
    for (int s : outcome.best_code.ops())
        ops.emplace_back(arnas::operation_name(s));
    report << "best_code: " << outcome.best_code.str() << '\n';
    report << "best_operations: " << join(ops, " ") << '\n';
    report << "best_accuracy: " << fmt_real(outcome.best_accuracy) << '\n';
    report << "optimum_code: " << outcome.optimum.code.str() << '\n';
    report << "optimum_accuracy: " << fmt_real(outcome.optimum.accuracy) << '\n';
    report << "regret: " << fmt_real(outcome.regret) << '\n';
    report << "fes_used: " << outcome.run.fes_used << '\n';

    auto trace = open_output(dir / "arnas_trace.csv");
    write_trace(trace, outcome.run, header);
    return outcome;
}

} // namespace embgo::experiment
