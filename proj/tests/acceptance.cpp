// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "iwso/baselines.hpp"
#include "iwso/benchmarks.hpp"
#include "iwso/csv.hpp"
#include "iwso/harness.hpp"
#include "iwso/iwso.hpp"

namespace fs = std::filesystem;
using iwso::bench::FunctionId;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail,
            Clock::time_point started) {
    const double secs = std::chrono::duration<double>(Clock::now() - started).count();
    std::printf("[%s] %2d %-34s %s (%.2fs)\n", pass ? "PASS" : "FAIL", id, title.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Independent copy of the benchmark table: id, name, modality, separability, LB, UB, dim.
struct TableRow {
    int id;
    const char* name;
    bool multimodal;
    bool separable;
    double lower;
    double upper;
    std::size_t dim;
};

constexpr double kPi = std::numbers::pi;

const std::array<TableRow, 23> kTable{{
    {1, "ackley", true, false, -32.768, 32.768, 30},
    {2, "ackley_2", true, false, -32.768, 32.768, 2},
    {3, "booth", false, false, -10, 10, 2},
    {4, "cosine matrix", true, false, -10, 10, 30},
    {5, "dixon-price", false, false, -10, 10, 30},
    {6, "foxholes", true, false, -65.536, 65.536, 2},
    {7, "griewank", true, false, -600, 600, 30},
    {8, "levy function", true, false, -10, 10, 30},
    {9, "michalewicz", true, false, 0, kPi, 10},
    {10, "multimodal sphere", true, true, -10, 10, 30},
    {11, "noisy quadratic", false, true, -10, 10, 30},
    {12, "noisy sphere", false, true, -10, 10, 30},
    {13, "powell sum", false, true, -1, 1, 30},
    {14, "rastrigin", true, true, -5.12, 5.12, 30},
    {15, "rastrigin_2", true, true, -5.12, 5.12, 30},
    {16, "rosenbrock", false, false, -5, 10, 30},
    {17, "salomon", true, true, -100, 100, 30},
    {18, "schwefel", true, true, -500, 500, 30},
    {19, "sine wave", true, true, -kPi, kPi, 30},
    {20, "sphere function", false, true, -5.12, 5.12, 30},
    {21, "three hump camel", false, false, -5, 5, 2},
    {22, "xin-she yang 4", true, false, -10, 10, 30},
    {23, "zakharov", false, false, -5, 10, 30},
}};

iwso::StatsSummary replicate(const iwso::Optimizer& opt, FunctionId fn, int runs,
                             std::uint64_t seed) {
    return iwso::run_replicates(opt, fn, runs, seed);
}

// ---------------------------------------------------------------------------

void schedules() {
    const auto t0 = Clock::now();
    iwso::RandomSource rng(1);
    double worst = 0.0;
    int tuples = 0;
    bool endpoints = true;
    for (int k = 0; k < 1000; ++k) {
        iwso::IwsoParams p;
        p.t_max = 1 + static_cast<int>(rng.index(1000));
        p.m_min = 0.01 + 2.0 * rng.uniform01();
        p.m_max = p.m_min + 3.0 * rng.uniform01();
        p.alpha_min = 0.01 + 2.0 * rng.uniform01();
        p.alpha_max = p.alpha_min + 3.0 * rng.uniform01();
        int t = static_cast<int>(rng.index(static_cast<std::size_t>(p.t_max) + 1));
        if (k % 10 == 0) {
            t = 0;
        } else if (k % 10 == 1) {
            t = p.t_max;
        }
        const long double frac = static_cast<long double>(t) / p.t_max;
        const long double m = p.m_max - frac * (static_cast<long double>(p.m_max) - p.m_min);
        const long double a =
            p.alpha_min + frac * (static_cast<long double>(p.alpha_max) - p.alpha_min);
        worst = std::max(worst, static_cast<double>(std::abs(iwso::matchmaker_factor(t, p) - m)));
        worst = std::max(worst, static_cast<double>(std::abs(iwso::elimination_factor(t, p) - a)));
        if (t == 0) {
            endpoints &= iwso::matchmaker_factor(t, p) == p.m_max &&
                         iwso::elimination_factor(t, p) == p.alpha_min;
        }
        if (t == p.t_max) {
            endpoints &= iwso::matchmaker_factor(t, p) == p.m_min &&
                         iwso::elimination_factor(t, p) == p.alpha_max;
        }
        ++tuples;
    }
    const bool fast = Clock::now() - t0 < std::chrono::seconds(1);
    report(1, "schedule exactness", worst <= 1e-12 && endpoints && fast,
           std::to_string(tuples) + " tuples, max error " + fmt(worst) +
               (endpoints ? ", endpoints exact" : ", endpoint mismatch"),
           t0);
}

void invariants() {
    const auto t0 = Clock::now();
    const iwso::IwsoOptimizer opt;
    int traces = 0;
    int monotone_violations = 0;
    int infeasible = 0;
    for (const auto& row : kTable) {
        const auto id = static_cast<FunctionId>(row.id);
        const auto obj = iwso::bench::objective(id);
        const auto space = iwso::SearchSpace::uniform(row.dim, row.lower, row.upper);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto r = opt.run(obj, space, seed);
            ++traces;
            for (std::size_t t = 1; t < r.trace.size(); ++t) {
                if (r.trace[t].best_fitness > r.trace[t - 1].best_fitness) {
                    ++monotone_violations;
                }
            }
            for (double v : r.best_point) {
                if (!(v >= row.lower && v <= row.upper)) {
                    ++infeasible;
                    break;
                }
            }
        }
    }
    const bool fast = Clock::now() - t0 < std::chrono::minutes(2);
    report(2, "elitism invariant", monotone_violations == 0 && fast,
           std::to_string(traces) + " traces, " + std::to_string(monotone_violations) +
               " increases",
           t0);
    report(3, "feasibility invariant", infeasible == 0 && fast,
           std::to_string(traces) + " best points, " + std::to_string(infeasible) + " outside box",
           t0);
}

void oracle() {
    const auto t0 = Clock::now();
    auto f = [](double x) { return (x - 0.7) * (x - 0.7); };
    double oracle_min = INFINITY;
    for (long k = 0; k <= 40000; ++k) {
        oracle_min = std::min(oracle_min, f(-2.0 + 1e-4 * static_cast<double>(k)));
    }
    const auto obj = iwso::WeightedObjective::single(
        [&f](std::span<const double> x) { return f(x[0]); }, 1);
    const iwso::SearchSpace space({-2.0}, {2.0});
    iwso::IwsoParams p;
    p.pop_size = 20;
    p.t_max = 200;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto r = iwso::optimize(obj, space, p, seed);
        worst = std::max(worst, std::abs(r.best_fitness - oracle_min));
    }
    const bool fast = Clock::now() - t0 < std::chrono::seconds(10);
    report(4, "oracle equivalence", worst <= 1e-3 && fast,
           "max |best - oracle| = " + fmt(worst) + " over 20 seeds", t0);
}

void table_bands() {
    const auto t0 = Clock::now();
    const iwso::IwsoOptimizer opt;
    struct Band {
        FunctionId id;
        double limit;
    };
    const Band bands[] = {{FunctionId::f3, 0.05},
                          {FunctionId::f20, 13.0},
                          {FunctionId::f1, 10.0},
                          {FunctionId::f21, 0.01}};
    bool pass = true;
    std::string detail;
    for (const auto& b : bands) {
        const double mean = replicate(opt, b.id, 30, 1).mean;
        const bool ok = mean <= b.limit;
        pass &= ok;
        detail += iwso::bench::to_string(b.id) + " " + fmt(mean) + (ok ? "<=" : ">") +
                  fmt(b.limit) + "; ";
    }
    pass &= Clock::now() - t0 < std::chrono::minutes(5);
    report(5, "benchmark bands", pass, detail, t0);
}

void comparison() {
    const auto t0 = Clock::now();
    const iwso::IwsoOptimizer iw;
    const iwso::BaselineOptimizer ga(iwso::BaselineParams::defaults(iwso::BaselineKind::ga));
    const iwso::BaselineOptimizer de(iwso::BaselineParams::defaults(iwso::BaselineKind::de));
    const iwso::Optimizer* algs[] = {&iw, &ga, &de};
    bool pass = true;
    std::string detail;
    for (auto id : {FunctionId::f1, FunctionId::f7, FunctionId::f8, FunctionId::f17}) {
        const auto s = iwso::compare(algs, id, 30, 1);
        const bool ok = s[0].mean < s[1].mean && s[0].mean < s[2].mean;
        pass &= ok;
        detail += iwso::bench::to_string(id) + " iwso " + fmt(s[0].mean) + " ga " +
                  fmt(s[1].mean) + " de " + fmt(s[2].mean) + (ok ? " ok; " : " NO; ");
    }
    pass &= Clock::now() - t0 < std::chrono::minutes(10);
    report(6, "comparison vs GA and DE", pass, detail, t0);
}

void tmax_trend() {
    const auto t0 = Clock::now();
    const auto fns = iwso::bench::unambiguous_functions();
    const int grid[] = {125, 500};
    const auto sweep = iwso::sensitivity_sweep_tmax(fns, grid, 30, 1);
    int improved = 0;
    std::string worse;
    for (std::size_t f = 0; f < fns.size(); ++f) {
        if (sweep.cells[f][1].mean <= sweep.cells[f][0].mean) {
            ++improved;
        } else {
            worse += iwso::bench::to_string(fns[f]) + " ";
        }
    }
    const bool pass = improved * 10 >= static_cast<int>(fns.size()) * 6 &&
                      Clock::now() - t0 < std::chrono::minutes(20);
    report(7, "T_max sensitivity trend", pass,
           std::to_string(improved) + "/" + std::to_string(fns.size()) +
               " functions improve at 500" + (worse.empty() ? "" : " (not: " + worse + ")"),
           t0);
}

void matchmaker_trend() {
    const auto t0 = Clock::now();
    const FunctionId fns[] = {FunctionId::f20, FunctionId::f16};
    const iwso::MatchmakerCase cases[] = {iwso::kMatchmakerCases[2], iwso::kMatchmakerCases[3]};
    const auto sweep = iwso::sensitivity_sweep_matchmaker(fns, cases, 30, 1);
    bool pass = Clock::now() - t0 < std::chrono::minutes(10);
    std::string detail;
    for (std::size_t f = 0; f < 2; ++f) {
        const double c3 = sweep.cells[f][0].mean;
        const double c4 = sweep.cells[f][1].mean;
        pass &= c3 <= c4;
        detail += iwso::bench::to_string(fns[f]) + " C3 " + fmt(c3) + " C4 " + fmt(c4) + "; ";
    }
    report(8, "matchmaker sensitivity trend", pass, detail, t0);
}

double seconds_per_step(int pop, std::size_t dim) {
    const auto obj = iwso::bench::objective(FunctionId::f20, dim);
    const auto space = iwso::bench::search_space(FunctionId::f20, dim);
    iwso::IwsoParams p;
    p.pop_size = pop;
    p.t_max = 1500;
    std::vector<double> samples;
    for (std::uint64_t seed = 1; seed <= 7; ++seed) {
        iwso::RandomSource rng(seed);
        auto state = iwso::initialize_state(obj, space, p, rng);
        const auto start = Clock::now();
        while (state.t < p.t_max) {
            iwso::step(state, obj, p, rng, space);
        }
        samples.push_back(std::chrono::duration<double>(Clock::now() - start).count() / p.t_max);
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

void complexity() {
    const auto t0 = Clock::now();
    seconds_per_step(30, 30);
    const double base = seconds_per_step(30, 30);
    const double pop = seconds_per_step(60, 30) / base;
    const double dim = seconds_per_step(30, 60) / base;
    const bool pass = pop >= 1.6 && pop <= 2.6 && dim >= 1.6 && dim <= 2.6 &&
                      Clock::now() - t0 < std::chrono::minutes(2);
    report(9, "linear complexity", pass, "n 30->60 ratio " + fmt(pop) + ", D 30->60 ratio " +
                                             fmt(dim),
           t0);
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Blanks the named column in every data row.
std::string drop_column(const std::string& text, const std::string& column) {
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    const auto names = iwso::csv::split_record(header);
    const auto pos = std::find(names.begin(), names.end(), column);
    if (pos == names.end()) {
        return text;
    }
    const auto idx = static_cast<std::size_t>(pos - names.begin());
    std::string out = header + "\n";
    std::string line;
    while (std::getline(in, line)) {
        auto fields = iwso::csv::split_record(line);
        if (idx < fields.size()) {
            fields[idx].clear();
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out += (i ? "," : "") + fields[i];
        }
        out += "\n";
    }
    return out;
}

std::string normalized(const fs::path& p) {
    return drop_column(drop_column(read_file(p), "runtime_ms"), "mean_runtime_ms");
}

void determinism() {
    const auto t0 = Clock::now();
    const fs::path root = fs::temp_directory_path() / "iwso_acceptance_cli";
    fs::remove_all(root);
    const std::vector<std::string> commands{
        "run --algorithm iwso --function f3 --runs 3 --seed 7 --out out.csv --trace",
        "run --algorithm pso --function f1 --runs 2 --out out.csv --trace",
        "compare --algorithms iwso,ga,pso,de --function f17 --runs 3 --out out.csv",
        "sweep --param tmax --functions f3,f21 --grid 10,20 --runs 2 --out out.csv",
        "sweep --param matchmaker --functions f20 --runs 2 --iters 10 --out out.csv",
        "list --out out.csv",
    };
    bool pass = true;
    int compared = 0;
    std::string detail;
    for (std::size_t c = 0; c < commands.size(); ++c) {
        std::vector<fs::path> dirs;
        for (int rep = 0; rep < 2; ++rep) {
            const fs::path dir = root / (std::to_string(c) + "_" + std::to_string(rep));
            fs::create_directories(dir);
            const std::string cmd = "cd '" + dir.string() + "' && '" IWSO_CLI_PATH "' " +
                                    commands[c] + " > /dev/null 2>&1";
            const int status = std::system(cmd.c_str());
            if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
                pass = false;
                detail += "'" + commands[c] + "' failed; ";
            }
            dirs.push_back(dir);
        }
        for (const auto& entry : fs::directory_iterator(dirs[0])) {
            const auto other = dirs[1] / entry.path().filename();
            ++compared;
            if (!fs::exists(other) || normalized(entry.path()) != normalized(other)) {
                pass = false;
                detail += entry.path().filename().string() + " differs; ";
            }
        }
    }
    fs::remove_all(root);
    pass &= compared > 0 && Clock::now() - t0 < std::chrono::minutes(1);
    report(10, "CLI determinism", pass,
           std::to_string(compared) + " files compared" + (detail.empty() ? "" : ": " + detail),
           t0);
}

// Independent optimum checks, written from the closed forms.
struct OptimumCheck {
    int id;
    std::vector<double> point;
    double value;
};

std::vector<OptimumCheck> optimum_checks() {
    auto fill = [](std::size_t n, double v) { return std::vector<double>(n, v); };
    std::vector<double> dixon(30);
    for (std::size_t i = 0; i < 30; ++i) {
        const double p = std::pow(2.0, static_cast<double>(i + 1));
        dixon[i] = std::pow(2.0, -(p - 2.0) / p);
    }
    return {
        {1, fill(30, 0), 0.0},
        {2, fill(2, 0), -200.0},
        {3, {1, 3}, 0.0},
        {4, fill(30, 0), -3.0},
        {5, dixon, 0.0},
        {7, fill(30, 0), 0.0},
        {8, fill(30, 1), 0.0},
        {10, fill(30, 0), -300.0},
        {13, fill(30, 0), 0.0},
        {14, fill(30, 0), 0.0},
        {15, fill(30, 0), 0.0},
        {16, fill(30, 1), 0.0},
        {17, fill(30, 0), 0.0},
        {19, fill(30, kPi / 2), -30.0},
        {20, fill(30, 0), 0.0},
        {21, fill(2, 0), 0.0},
        {22, fill(30, 0), -1.0},
        {23, fill(30, 0), 0.0},
    };
}

void registry() {
    const auto t0 = Clock::now();
    bool rows_ok = iwso::bench::all_functions().size() == kTable.size();
    std::string detail;
    for (const auto& row : kTable) {
        const auto& spec = iwso::bench::function_spec(static_cast<FunctionId>(row.id));
        const bool ok = spec.name == row.name &&
                        (spec.modality == iwso::bench::Modality::multimodal) == row.multimodal &&
                        (spec.separability == iwso::bench::Separability::separable) ==
                            row.separable &&
                        spec.lower == row.lower && spec.upper == row.upper &&
                        spec.default_dim == row.dim;
        if (!ok) {
            rows_ok = false;
            detail += "row f" + std::to_string(row.id) + " mismatch; ";
        }
    }
    int verified = 0;
    double worst = 0.0;
    for (auto id : iwso::bench::all_functions()) {
        const auto& spec = iwso::bench::function_spec(id);
        if (!spec.known_optimum) {
            continue;
        }
        const double at = iwso::bench::evaluate(id, spec.known_optimum->point);
        worst = std::max(worst, std::abs(at - spec.known_optimum->value));
        ++verified;
    }
    for (const auto& c : optimum_checks()) {
        const auto id = static_cast<FunctionId>(c.id);
        const auto& spec = iwso::bench::function_spec(id);
        worst = std::max(worst, std::abs(iwso::bench::evaluate(id, c.point) - c.value));
        if (!spec.known_optimum || spec.known_optimum->value != c.value) {
            rows_ok = false;
            detail += "optimum f" + std::to_string(c.id) + " mismatch; ";
        }
    }
    // Schwefel and foxholes: registered value must be a local minimum of the function.
    for (auto id : {FunctionId::f6, FunctionId::f18}) {
        const auto& opt = *iwso::bench::function_spec(id).known_optimum;
        for (std::size_t j = 0; j < opt.point.size(); ++j) {
            for (double h : {-1e-4, 1e-4}) {
                auto q = opt.point;
                q[j] += h;
                if (iwso::bench::evaluate(id, q) < opt.value - 1e-9) {
                    rows_ok = false;
                    detail += iwso::bench::to_string(id) + " optimum not minimal; ";
                }
            }
        }
    }
    const bool pass =
        rows_ok && worst <= 1e-9 && Clock::now() - t0 < std::chrono::seconds(1);
    report(11, "benchmark registry", pass,
           std::to_string(kTable.size()) + " rows, " + std::to_string(verified) +
               " optima, max error " + fmt(worst) + (detail.empty() ? "" : "; " + detail),
           t0);
}

} // namespace

int main() {
    schedules();
    invariants();
    oracle();
    table_bands();
    comparison();
    tmax_trend();
    matchmaker_trend();
    complexity();
    determinism();
    registry();
    std::printf("%d of 11 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
