// Command-line front end for the IWSO library. Talks to the library only
// through the C interface in iwso/iwso.h.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iwso/iwso.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

constexpr const char* kOutputDirEnv = "IWSO_OUTPUT_DIR";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string library_error(const std::string& what) { return what + ": " + iwso_last_error(); }

using AlgorithmPtr = std::unique_ptr<iwso_algorithm, decltype(&iwso_algorithm_destroy)>;
using SummaryPtr = std::unique_ptr<iwso_summary, decltype(&iwso_summary_destroy)>;
using SummaryListPtr = std::unique_ptr<iwso_summary_list, decltype(&iwso_summary_list_destroy)>;

struct Knob {
    const char* key;
    const char* flags;
    const char* help;
    std::optional<double> value;
};

/// Options shared by run, compare and sweep.
struct Common {
    int runs = 30;
    std::uint64_t seed = 1;
    std::string out;
    unsigned threads = 1;
    std::string config;
    std::vector<Knob> knobs{
        {"pop_size", "--pop,--pop_size", "Population size", {}},
        {"t_max", "--iters,--t_max", "Iteration budget", {}},
        {"m_max", "--m-max,--m_max", "IWSO initial matchmaker factor", {}},
        {"m_min", "--m-min,--m_min", "IWSO final matchmaker factor", {}},
        {"alpha_min", "--alpha-min,--alpha_min", "IWSO initial elimination factor", {}},
        {"alpha_max", "--alpha-max,--alpha_max", "IWSO final elimination factor", {}},
        {"beta", "--beta", "IWSO reinitialization bias toward the best", {}},
        {"gamma", "--gamma", "IWSO reinitialization noise scale", {}},
        {"stall_limit", "--stall-limit,--stall_limit", "IWSO early stop after N stalled iterations", {}},
        {"target_fitness", "--target,--target_fitness", "IWSO early stop at this fitness", {}},
        {"r1", "--r1", "IWSO fixed attraction coefficient", {}},
        {"crossover_rate", "--crossover-rate,--crossover_rate", "GA crossover rate", {}},
        {"mutation_rate", "--mutation-rate,--mutation_rate", "GA per-gene mutation rate", {}},
        {"w", "--w", "PSO inertia weight", {}},
        {"c1", "--c1", "PSO cognitive coefficient", {}},
        {"c2", "--c2", "PSO social coefficient", {}},
        {"velocity_max", "--velocity-max,--velocity_max", "PSO velocity clamp", {}},
        {"f", "--f", "DE mutation factor", {}},
        {"cr", "--cr", "DE crossover probability", {}},
    };
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config, "Key-value configuration file (flags override it)");
    cmd->add_option("--runs,--n_runs", c.runs, "Independent runs per cell")->check(CLI::PositiveNumber);
    cmd->add_option("--seed,--base_seed", c.seed, "Seed of the first run; run k uses seed + k");
    cmd->add_option("--out,--output_path", c.out, "Output CSV path");
    cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
    for (Knob& k : c.knobs) {
        cmd->add_option(k.flags, k.value, k.help);
    }
}

/// Applies config-file entries to options the command line left unset.
void apply_config(CLI::App* cmd, const std::string& path) {
    if (path.empty()) {
        return;
    }
    if (!std::filesystem::exists(path)) {
        throw UsageError("config file '" + path + "' not found");
    }
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigTOML().from_file(path);
    } catch (const CLI::Error& e) {
        throw UsageError("cannot parse config file '" + path + "': " + e.what());
    }
    for (const CLI::ConfigItem& item : items) {
        if (item.name == "++" || item.name == "--") {
            continue;
        }
        if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == cmd->get_name())) {
            throw UsageError("config key '" + item.fullname() + "' is not valid for '" +
                             cmd->get_name() + "'");
        }
        if (item.name == "config") {
            throw UsageError("config files cannot include other config files");
        }
        CLI::Option* opt = nullptr;
        try {
            opt = cmd->get_option("--" + item.name);
        } catch (const CLI::OptionNotFound&) {
            throw UsageError("unknown config key '" + item.name + "'");
        }
        if (opt->count() > 0) {
            continue;
        }
        try {
            opt->add_result(item.inputs);
            opt->run_callback();
        } catch (const CLI::Error& e) {
            throw UsageError("config key '" + item.name + "': " + e.what());
        }
    }
}

std::filesystem::path resolve_output(const std::string& out, const std::string& fallback) {
    std::filesystem::path path = out.empty() ? std::filesystem::path(fallback) : std::filesystem::path(out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
            path = std::filesystem::path(dir) / path;
        }
    }
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw RunFailure("cannot create directory '" + path.parent_path().string() + "'");
        }
    }
    return path;
}

std::filesystem::path trace_path(const std::filesystem::path& out, std::size_t k) {
    const std::string name = out.stem().string() + "_run" + std::to_string(k) + "_trace.csv";
    return out.has_parent_path() ? out.parent_path() / name : std::filesystem::path(name);
}

int lookup_function(const std::string& text) {
    int id = 0;
    if (iwso_function_lookup(text.c_str(), &id) != IWSO_OK) {
        throw UsageError(library_error("--function"));
    }
    return id;
}

AlgorithmPtr make_algorithm(const std::string& name) {
    iwso_algorithm* raw = nullptr;
    if (iwso_algorithm_create(name.c_str(), &raw) != IWSO_OK) {
        throw UsageError(library_error("algorithm '" + name + "'"));
    }
    return AlgorithmPtr(raw, &iwso_algorithm_destroy);
}

bool accepts(const iwso_algorithm* algorithm, const char* key) {
    double unused = 0.0;
    return iwso_algorithm_get(algorithm, key, &unused) == IWSO_OK;
}

/// Builds and validates one handle per name; every given knob must apply to
/// at least one of them.
std::vector<AlgorithmPtr> configure(const std::vector<std::string>& names, const Common& c) {
    std::vector<AlgorithmPtr> algorithms;
    for (const std::string& name : names) {
        algorithms.push_back(make_algorithm(name));
    }
    for (const Knob& k : c.knobs) {
        if (!k.value) {
            continue;
        }
        bool applied = false;
        for (const AlgorithmPtr& a : algorithms) {
            if (!accepts(a.get(), k.key)) {
                continue;
            }
            if (iwso_algorithm_set(a.get(), k.key, *k.value) != IWSO_OK) {
                throw UsageError(library_error(std::string("--") + k.key));
            }
            applied = true;
        }
        if (!applied) {
            throw UsageError(std::string("option '") + k.key +
                             "' does not apply to the selected algorithm(s)");
        }
    }
    for (const AlgorithmPtr& a : algorithms) {
        if (iwso_algorithm_validate(a.get()) != IWSO_OK) {
            throw UsageError(library_error(std::string("invalid ") + iwso_algorithm_name(a.get()) +
                                           " configuration"));
        }
        double beta = 0.0;
        double gamma = 0.0;
        if (iwso_algorithm_get(a.get(), "beta", &beta) == IWSO_OK &&
            iwso_algorithm_get(a.get(), "gamma", &gamma) == IWSO_OK) {
            if (beta < 0.1 || beta > 0.5) {
                std::cerr << "warning: beta = " << beta << " is outside the recommended [0.1, 0.5]\n";
            }
            if (gamma < 0.2 || gamma > 0.8) {
                std::cerr << "warning: gamma = " << gamma << " is outside the recommended [0.2, 0.8]\n";
            }
        }
    }
    return algorithms;
}

void check(iwso_status status, const std::string& what) {
    if (status != IWSO_OK) {
        throw RunFailure(library_error(what));
    }
}

void print_summary(const iwso_summary* s) {
    iwso_summary_stats stats{};
    check(iwso_summary_stats_get(s, &stats), "summary");
    std::cout << iwso_summary_algorithm(s) << ' ' << iwso_summary_function(s)
              << ": runs=" << stats.n_runs << " mean=" << stats.mean << " std=" << stats.std
              << " best=" << stats.best << " mean_runtime_ms=" << stats.mean_runtime_ms << '\n';
}

std::vector<int> parse_functions(const std::vector<std::string>& items) {
    std::vector<int> ids;
    for (const std::string& item : items) {
        if (item == "all" || item == "unambiguous") {
            for (int id = 1; id <= static_cast<int>(iwso_function_count()); ++id) {
                iwso_function_info info{};
                check(iwso_function_info_get(id, &info), "function registry");
                if (item == "all" || !info.ambiguous) {
                    ids.push_back(id);
                }
            }
        } else {
            ids.push_back(lookup_function(item));
        }
    }
    return ids;
}

int cmd_run(const std::string& algorithm_name, const std::string& function, bool trace,
            const Common& c) {
    if (function.empty()) {
        throw UsageError("--function is required");
    }
    const int id = lookup_function(function);
    auto algorithms = configure({algorithm_name}, c);
    const auto out = resolve_output(c.out, "results.csv");

    iwso_summary* raw = nullptr;
    check(iwso_run_replicates(algorithms.front().get(), id, c.runs, c.seed, c.threads, trace ? 1 : 0,
                              &raw),
          "run");
    SummaryPtr summary(raw, &iwso_summary_destroy);
    check(iwso_summary_write_results_csv(summary.get(), out.string().c_str()), "writing results");
    if (trace) {
        for (std::size_t k = 0; const iwso_run* run = iwso_summary_run(summary.get(), k); ++k) {
            check(iwso_run_write_trace_csv(run, trace_path(out, k + 1).string().c_str()),
                  "writing trace");
        }
    }
    print_summary(summary.get());
    return kExitOk;
}

int cmd_compare(const std::vector<std::string>& names, const std::string& function, const Common& c) {
    if (function.empty()) {
        throw UsageError("--function is required");
    }
    if (names.empty()) {
        throw UsageError("--algorithms is required");
    }
    std::set<std::string> seen;
    for (const std::string& n : names) {
        if (!seen.insert(n).second) {
            throw UsageError("algorithm '" + n + "' listed more than once");
        }
    }
    const int id = lookup_function(function);
    auto algorithms = configure(names, c);
    const auto out = resolve_output(c.out, "compare.csv");

    std::vector<const iwso_algorithm*> view;
    for (const AlgorithmPtr& a : algorithms) {
        view.push_back(a.get());
    }
    iwso_summary_list* raw = nullptr;
    const iwso_status status =
        iwso_compare(view.data(), view.size(), id, c.runs, c.seed, c.threads, &raw);
    if (status == IWSO_ERR_INVALID_ARGUMENT) {
        throw UsageError(library_error("compare"));
    }
    check(status, "compare");
    SummaryListPtr list(raw, &iwso_summary_list_destroy);
    check(iwso_summary_list_write_csv(list.get(), out.string().c_str()), "writing summary");
    for (std::size_t i = 0; i < iwso_summary_list_size(list.get()); ++i) {
        print_summary(iwso_summary_list_at(list.get(), i));
    }
    return kExitOk;
}

int cmd_sweep(const std::string& param, const std::vector<std::string>& function_items,
              const std::vector<int>& grid, const std::vector<std::string>& cases, const Common& c) {
    const std::vector<int> ids = parse_functions(function_items.empty()
                                                     ? std::vector<std::string>{"all"}
                                                     : function_items);
    if (param == "matchmaker" && !grid.empty()) {
        throw UsageError("--grid applies to the tmax sweep only");
    }
    if (param == "tmax" && !cases.empty()) {
        throw UsageError("--cases applies to the matchmaker sweep only");
    }
    for (const Knob& k : c.knobs) {
        if (k.value && ((param == "tmax" && std::string(k.key) == "t_max") ||
                        (param == "matchmaker" &&
                         (std::string(k.key) == "m_max" || std::string(k.key) == "m_min")))) {
            throw UsageError(std::string("option '") + k.key + "' is the swept parameter");
        }
    }
    auto algorithms = configure({"iwso"}, c);
    const auto out = resolve_output(c.out, "sweep_" + param + ".csv");

    iwso_summary_list* raw = nullptr;
    iwso_status status = IWSO_OK;
    if (param == "tmax") {
        status = iwso_sweep_tmax(algorithms.front().get(), ids.data(), ids.size(),
                                 grid.empty() ? nullptr : grid.data(), grid.size(), c.runs, c.seed,
                                 c.threads, &raw);
    } else {
        std::vector<const char*> names;
        for (const std::string& s : cases) {
            names.push_back(s.c_str());
        }
        status = iwso_sweep_matchmaker(algorithms.front().get(), ids.data(), ids.size(),
                                       names.empty() ? nullptr : names.data(), names.size(), c.runs,
                                       c.seed, c.threads, &raw);
    }
    if (status == IWSO_ERR_INVALID_ARGUMENT || status == IWSO_ERR_LOOKUP) {
        throw UsageError(library_error("sweep"));
    }
    check(status, "sweep");
    SummaryListPtr list(raw, &iwso_summary_list_destroy);
    check(iwso_summary_list_write_csv(list.get(), out.string().c_str()), "writing summary");
    std::cout << "wrote " << iwso_summary_list_size(list.get()) << " summary rows to "
              << out.string() << '\n';
    return kExitOk;
}

int cmd_list(const std::string& out) {
    if (out.empty()) {
        check(iwso_registry_write_csv(nullptr), "list");
    } else {
        check(iwso_registry_write_csv(resolve_output(out, out).string().c_str()), "list");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Indian Wedding System Optimization: runs, comparisons, sweeps and the "
                 "benchmark registry.\nDefault output directory: $" +
                 std::string(kOutputDirEnv) + "."};
    app.require_subcommand(1);

    Common run_opts;
    std::string run_algorithm = "iwso";
    std::string run_function;
    bool run_trace = false;
    auto* run = app.add_subcommand("run", "Replicated runs of one algorithm on one function");
    run->add_option("--algorithm", run_algorithm, "iwso, ga, pso or de");
    run->add_option("--function", run_function, "Benchmark id (f1..f23) or name");
    run->add_flag("--trace", run_trace, "Also write <out-stem>_run<k>_trace.csv per run");
    add_common(run, run_opts);

    Common cmp_opts;
    std::vector<std::string> cmp_algorithms;
    std::string cmp_function;
    auto* compare = app.add_subcommand("compare", "Several algorithms under one budget");
    compare->add_option("--algorithms", cmp_algorithms, "Comma-separated list, e.g. iwso,ga,de")
        ->delimiter(',');
    compare->add_option("--function", cmp_function, "Benchmark id (f1..f23) or name");
    add_common(compare, cmp_opts);

    Common sweep_opts;
    std::string sweep_param;
    std::vector<std::string> sweep_functions;
    std::vector<int> sweep_grid;
    std::vector<std::string> sweep_cases;
    auto* sweep = app.add_subcommand("sweep", "IWSO sensitivity sweep over T_max or matchmaker cases");
    sweep->add_option("--param", sweep_param, "tmax or matchmaker")
        ->check(CLI::IsMember({"tmax", "matchmaker"}));
    sweep->add_option("--functions", sweep_functions,
                      "Comma-separated ids, 'all' (default) or 'unambiguous'")
        ->delimiter(',');
    sweep->add_option("--grid", sweep_grid, "T_max values (default 125,250,375,500)")->delimiter(',');
    sweep->add_option("--cases", sweep_cases, "Matchmaker cases among C1..C4 (default all)")
        ->delimiter(',');
    add_common(sweep, sweep_opts);

    std::string list_out;
    auto* list = app.add_subcommand("list", "Print the benchmark registry as CSV");
    list->add_option("--out", list_out, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
        if (run->parsed()) {
            apply_config(run, run_opts.config);
            return cmd_run(run_algorithm, run_function, run_trace, run_opts);
        }
        if (compare->parsed()) {
            apply_config(compare, cmp_opts.config);
            return cmd_compare(cmp_algorithms, cmp_function, cmp_opts);
        }
        if (sweep->parsed()) {
            apply_config(sweep, sweep_opts.config);
            if (sweep_param.empty()) {
                throw UsageError("--param is required");
            }
            return cmd_sweep(sweep_param, sweep_functions, sweep_grid, sweep_cases, sweep_opts);
        }
        return cmd_list(list_out);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const UsageError& e) {
        CLI::App* active = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        std::cerr << "error: " << e.what() << "\n\n" << active->help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
