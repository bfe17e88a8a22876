#include "iwso/iwso.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>
#include <variant>
#include <vector>

#include "iwso/baselines.hpp"
#include "iwso/benchmarks.hpp"
#include "iwso/csv.hpp"
#include "iwso/error.hpp"
#include "iwso/harness.hpp"
#include "iwso/iwso.hpp"

struct iwso_algorithm {
    std::string name;
    std::variant<iwso::IwsoParams, iwso::BaselineParams> params;
};

struct iwso_run {
    iwso::RunResult result;
};

struct iwso_summary {
    iwso::StatsSummary summary;
    std::vector<iwso_run> runs;
};

struct iwso_summary_list {
    std::vector<iwso_summary> items;
};

namespace {

thread_local std::string last_error;

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

template <typename Fn>
iwso_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return IWSO_OK;
    } catch (const iwso::InvalidArgument& e) {
        last_error = e.what();
        return IWSO_ERR_INVALID_ARGUMENT;
    } catch (const iwso::EvaluationError& e) {
        last_error = e.what();
        return IWSO_ERR_EVALUATION;
    } catch (const iwso::LookupError& e) {
        last_error = e.what();
        return IWSO_ERR_LOOKUP;
    } catch (const IoError& e) {
        last_error = e.what();
        return IWSO_ERR_IO;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return IWSO_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return IWSO_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return IWSO_ERR_INTERNAL;
    }
}

void require(bool condition, const char* message) {
    if (!condition) {
        throw iwso::InvalidArgument(message);
    }
}

template <typename Writer>
void write_to(const char* path, Writer&& writer) {
    if (path == nullptr) {
        writer(std::cout);
        std::cout.flush();
        if (!std::cout) {
            throw IoError("failed writing to stdout");
        }
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError(std::string("cannot open '") + path + "' for writing");
    }
    writer(out);
    out.close();
    if (!out) {
        throw IoError(std::string("failed writing '") + path + "'");
    }
}

iwso::bench::FunctionId function_from(int id) {
    if (id < 1 || id > static_cast<int>(iwso::bench::kFunctionCount)) {
        throw iwso::LookupError("unknown benchmark function id " + std::to_string(id));
    }
    return static_cast<iwso::bench::FunctionId>(id);
}

int as_int(const char* key, double value) {
    if (!std::isfinite(value) || value != std::floor(value) || std::abs(value) > 1e9) {
        throw iwso::InvalidArgument(std::string(key) + " must be an integer");
    }
    return static_cast<int>(value);
}

std::unique_ptr<iwso::Optimizer> make_optimizer(const iwso_algorithm& algorithm) {
    if (const auto* p = std::get_if<iwso::IwsoParams>(&algorithm.params)) {
        return std::make_unique<iwso::IwsoOptimizer>(*p);
    }
    return std::make_unique<iwso::BaselineOptimizer>(std::get<iwso::BaselineParams>(algorithm.params));
}

iwso_summary wrap(iwso::StatsSummary summary) {
    iwso_summary out;
    out.runs.reserve(summary.runs.size());
    for (auto& r : summary.runs) {
        out.runs.push_back(iwso_run{std::move(r)});
    }
    summary.runs.clear();
    out.summary = std::move(summary);
    return out;
}

iwso_summary_list* wrap(const iwso::SweepReport& report) {
    auto list = std::make_unique<iwso_summary_list>();
    for (const auto& row : report.cells) {
        for (const auto& cell : row) {
            list->items.push_back(wrap(cell));
        }
    }
    return list.release();
}

std::vector<iwso::bench::FunctionId> functions_from(const int* ids, std::size_t count) {
    require(ids != nullptr && count > 0, "at least one function id is required");
    std::vector<iwso::bench::FunctionId> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(function_from(ids[i]));
    }
    return out;
}

iwso::IwsoParams base_params(const iwso_algorithm* base) {
    if (base == nullptr) {
        return {};
    }
    const auto* p = std::get_if<iwso::IwsoParams>(&base->params);
    require(p != nullptr, "sweeps require an iwso base configuration");
    return *p;
}

} // namespace

extern "C" {

const char* iwso_version(void) { return "1.0.0"; }

const char* iwso_last_error(void) { return last_error.c_str(); }

size_t iwso_function_count(void) { return iwso::bench::kFunctionCount; }

iwso_status iwso_function_lookup(const char* text, int* id_out) {
    return guarded([&] {
        require(text != nullptr && id_out != nullptr, "null argument");
        *id_out = static_cast<int>(iwso::bench::parse_function_id(text));
    });
}

iwso_status iwso_function_info_get(int id, iwso_function_info* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        const auto& spec = iwso::bench::function_spec(function_from(id));
        out->id = id;
        out->name = spec.name.c_str();
        out->multimodal = spec.modality == iwso::bench::Modality::multimodal;
        out->separable = spec.separability == iwso::bench::Separability::separable;
        out->default_dim = spec.default_dim;
        out->lower = spec.lower;
        out->upper = spec.upper;
        out->fixed_dim = spec.fixed_dim;
        out->noisy = spec.noisy;
        out->ambiguous = spec.ambiguous;
        out->has_optimum = spec.known_optimum.has_value();
        out->optimum_value = spec.known_optimum ? spec.known_optimum->value : 0.0;
    });
}

iwso_status iwso_function_evaluate(int id, const double* x, size_t dim, uint64_t noise_seed,
                                   double* out) {
    return guarded([&] {
        require(x != nullptr && out != nullptr, "null argument");
        iwso::RandomSource noise(noise_seed);
        *out = iwso::bench::evaluate(function_from(id), std::span<const double>(x, dim), noise);
    });
}

iwso_status iwso_registry_write_csv(const char* path) {
    return guarded([&] { write_to(path, [](std::ostream& os) { iwso::csv::write_registry(os); }); });
}

iwso_status iwso_algorithm_create(const char* name, iwso_algorithm** out) {
    return guarded([&] {
        require(name != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        auto algorithm = std::make_unique<iwso_algorithm>();
        const std::string text(name);
        if (text == "iwso" || text == "IWSO") {
            algorithm->name = "iwso";
            algorithm->params = iwso::IwsoParams{};
        } else {
            const auto kind = iwso::parse_baseline_kind(text);
            algorithm->name = std::string(iwso::to_string(kind));
            algorithm->params = iwso::BaselineParams::defaults(kind);
        }
        *out = algorithm.release();
    });
}

void iwso_algorithm_destroy(iwso_algorithm* algorithm) { delete algorithm; }

const char* iwso_algorithm_name(const iwso_algorithm* algorithm) {
    return algorithm ? algorithm->name.c_str() : "";
}

iwso_status iwso_algorithm_set(iwso_algorithm* algorithm, const char* key, double value) {
    return guarded([&] {
        require(algorithm != nullptr && key != nullptr, "null argument");
        const std::string k(key);
        if (std::isnan(value)) {
            throw iwso::InvalidArgument(k + " must not be NaN");
        }
        if (auto* p = std::get_if<iwso::IwsoParams>(&algorithm->params)) {
            if (k == "pop_size") p->pop_size = as_int(key, value);
            else if (k == "t_max") p->t_max = as_int(key, value);
            else if (k == "m_max") p->m_max = value;
            else if (k == "m_min") p->m_min = value;
            else if (k == "alpha_min") p->alpha_min = value;
            else if (k == "alpha_max") p->alpha_max = value;
            else if (k == "beta") p->beta = value;
            else if (k == "gamma") p->gamma = value;
            else if (k == "stall_limit") {
                const int limit = as_int(key, value);
                p->stall_limit = limit == 0 ? std::nullopt : std::optional<int>(limit);
            } else if (k == "target_fitness") p->target_fitness = value;
            else if (k == "r1") p->fixed_r1 = value;
            else throw iwso::InvalidArgument("unknown iwso parameter '" + k + "'");
            return;
        }
        auto& b = std::get<iwso::BaselineParams>(algorithm->params);
        if (k == "pop_size") b.pop_size = as_int(key, value);
        else if (k == "t_max") b.t_max = as_int(key, value);
        else if (k == "crossover_rate") b.crossover_rate = value;
        else if (k == "mutation_rate") b.mutation_rate = value;
        else if (k == "mutation_scale") b.mutation_scale = value;
        else if (k == "tournament_size") b.tournament_size = as_int(key, value);
        else if (k == "w") b.w = value;
        else if (k == "c1") b.c1 = value;
        else if (k == "c2") b.c2 = value;
        else if (k == "velocity_max") b.velocity_max = value;
        else if (k == "f") b.f = value;
        else if (k == "cr") b.cr = value;
        else throw iwso::InvalidArgument("unknown " + algorithm->name + " parameter '" + k + "'");
    });
}

iwso_status iwso_algorithm_get(const iwso_algorithm* algorithm, const char* key, double* out) {
    return guarded([&] {
        require(algorithm != nullptr && key != nullptr && out != nullptr, "null argument");
        const std::string k(key);
        const double nan = std::nan("");
        if (const auto* p = std::get_if<iwso::IwsoParams>(&algorithm->params)) {
            if (k == "pop_size") *out = p->pop_size;
            else if (k == "t_max") *out = p->t_max;
            else if (k == "m_max") *out = p->m_max;
            else if (k == "m_min") *out = p->m_min;
            else if (k == "alpha_min") *out = p->alpha_min;
            else if (k == "alpha_max") *out = p->alpha_max;
            else if (k == "beta") *out = p->beta;
            else if (k == "gamma") *out = p->gamma;
            else if (k == "stall_limit") *out = p->stall_limit ? *p->stall_limit : 0;
            else if (k == "target_fitness") *out = p->target_fitness.value_or(nan);
            else if (k == "r1") *out = p->fixed_r1.value_or(nan);
            else throw iwso::InvalidArgument("unknown iwso parameter '" + k + "'");
            return;
        }
        const auto& b = std::get<iwso::BaselineParams>(algorithm->params);
        if (k == "pop_size") *out = b.pop_size;
        else if (k == "t_max") *out = b.t_max;
        else if (k == "crossover_rate") *out = b.crossover_rate;
        else if (k == "mutation_rate") *out = b.mutation_rate;
        else if (k == "mutation_scale") *out = b.mutation_scale;
        else if (k == "tournament_size") *out = b.tournament_size;
        else if (k == "w") *out = b.w;
        else if (k == "c1") *out = b.c1;
        else if (k == "c2") *out = b.c2;
        else if (k == "velocity_max") *out = b.velocity_max;
        else if (k == "f") *out = b.f;
        else if (k == "cr") *out = b.cr;
        else throw iwso::InvalidArgument("unknown " + algorithm->name + " parameter '" + k + "'");
    });
}

iwso_status iwso_algorithm_validate(const iwso_algorithm* algorithm) {
    return guarded([&] {
        require(algorithm != nullptr, "null argument");
        std::visit([](const auto& p) { p.validate(); }, algorithm->params);
    });
}

iwso_status iwso_optimize(const iwso_algorithm* algorithm, int function_id, uint64_t seed,
                          iwso_run** out) {
    return guarded([&] {
        require(algorithm != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        const auto f = function_from(function_id);
        const auto optimizer = make_optimizer(*algorithm);
        auto run = std::make_unique<iwso_run>();
        run->result = optimizer->run(iwso::bench::objective(f), iwso::bench::search_space(f), seed);
        *out = run.release();
    });
}

void iwso_run_destroy(iwso_run* run) { delete run; }

double iwso_run_best_fitness(const iwso_run* run) {
    return run ? run->result.best_fitness : std::nan("");
}

size_t iwso_run_dim(const iwso_run* run) { return run ? run->result.best_point.size() : 0; }

iwso_status iwso_run_best_point(const iwso_run* run, double* out, size_t capacity) {
    return guarded([&] {
        require(run != nullptr && out != nullptr, "null argument");
        const auto& p = run->result.best_point;
        require(capacity >= p.size(), "output buffer too small");
        std::copy(p.begin(), p.end(), out);
    });
}

uint64_t iwso_run_evaluations(const iwso_run* run) { return run ? run->result.evaluations : 0; }

uint64_t iwso_run_seed(const iwso_run* run) { return run ? run->result.seed : 0; }

double iwso_run_runtime_ms(const iwso_run* run) {
    return run ? std::chrono::duration<double, std::milli>(run->result.runtime).count() : 0.0;
}

iwso_stop_reason iwso_run_stop_reason(const iwso_run* run) {
    if (run == nullptr) {
        return IWSO_STOP_BUDGET;
    }
    switch (run->result.stop_reason) {
    case iwso::StopReason::budget:
        return IWSO_STOP_BUDGET;
    case iwso::StopReason::stall:
        return IWSO_STOP_STALL;
    case iwso::StopReason::target:
        return IWSO_STOP_TARGET;
    }
    return IWSO_STOP_BUDGET;
}

size_t iwso_run_trace_length(const iwso_run* run) { return run ? run->result.trace.size() : 0; }

iwso_status iwso_run_trace_record(const iwso_run* run, size_t index, iwso_trace_record* out) {
    return guarded([&] {
        require(run != nullptr && out != nullptr, "null argument");
        if (index >= run->result.trace.size()) {
            throw iwso::LookupError("trace index out of range");
        }
        const auto& t = run->result.trace[index];
        *out = iwso_trace_record{t.iteration, t.best_fitness, t.mean_fitness, t.m,
                                 t.alpha,     t.e_match,      t.eliminated};
    });
}

iwso_status iwso_run_write_trace_csv(const iwso_run* run, const char* path) {
    return guarded([&] {
        require(run != nullptr, "null argument");
        write_to(path, [&](std::ostream& os) { iwso::csv::write_trace(os, run->result.trace); });
    });
}

iwso_status iwso_run_replicates(const iwso_algorithm* algorithm, int function_id, int n_runs,
                                uint64_t base_seed, unsigned threads, int keep_runs,
                                iwso_summary** out) {
    return guarded([&] {
        require(algorithm != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        const auto optimizer = make_optimizer(*algorithm);
        iwso::HarnessOptions options{threads, keep_runs != 0};
        auto summary = std::make_unique<iwso_summary>(wrap(iwso::run_replicates(
            *optimizer, function_from(function_id), n_runs, base_seed, options)));
        *out = summary.release();
    });
}

void iwso_summary_destroy(iwso_summary* summary) { delete summary; }

iwso_status iwso_summary_stats_get(const iwso_summary* summary, iwso_summary_stats* out) {
    return guarded([&] {
        require(summary != nullptr && out != nullptr, "null argument");
        const auto row = iwso::csv::summary_row(summary->summary);
        *out = iwso_summary_stats{row.n_runs, row.mean, row.std, row.best, row.mean_runtime_ms};
    });
}

const char* iwso_summary_algorithm(const iwso_summary* summary) {
    return summary ? summary->summary.algorithm.c_str() : "";
}

const char* iwso_summary_function(const iwso_summary* summary) {
    return summary ? summary->summary.function.c_str() : "";
}

const iwso_run* iwso_summary_run(const iwso_summary* summary, size_t index) {
    if (summary == nullptr || index >= summary->runs.size()) {
        return nullptr;
    }
    return &summary->runs[index];
}

iwso_status iwso_summary_write_results_csv(const iwso_summary* summary, const char* path) {
    return guarded([&] {
        require(summary != nullptr, "null argument");
        const auto rows = iwso::csv::result_rows(summary->summary);
        write_to(path, [&](std::ostream& os) { iwso::csv::write_results(os, rows); });
    });
}

iwso_status iwso_compare(const iwso_algorithm* const* algorithms, size_t count, int function_id,
                         int n_runs, uint64_t base_seed, unsigned threads,
                         iwso_summary_list** out) {
    return guarded([&] {
        require(algorithms != nullptr && out != nullptr && count > 0, "null argument");
        *out = nullptr;
        std::vector<std::unique_ptr<iwso::Optimizer>> owned;
        std::vector<const iwso::Optimizer*> view;
        for (size_t i = 0; i < count; ++i) {
            require(algorithms[i] != nullptr, "null algorithm");
            owned.push_back(make_optimizer(*algorithms[i]));
            view.push_back(owned.back().get());
        }
        auto summaries = iwso::compare(view, function_from(function_id), n_runs, base_seed,
                                       iwso::HarnessOptions{threads, false});
        auto list = std::make_unique<iwso_summary_list>();
        for (auto& s : summaries) {
            list->items.push_back(wrap(std::move(s)));
        }
        *out = list.release();
    });
}

iwso_status iwso_sweep_tmax(const iwso_algorithm* base, const int* function_ids,
                            size_t function_count, const int* grid, size_t grid_count, int n_runs,
                            uint64_t base_seed, unsigned threads, iwso_summary_list** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = nullptr;
        const auto functions = functions_from(function_ids, function_count);
        std::vector<int> values(iwso::kTmaxGrid.begin(), iwso::kTmaxGrid.end());
        if (grid != nullptr) {
            require(grid_count > 0, "empty T_max grid");
            values.assign(grid, grid + grid_count);
        }
        const auto report = iwso::sensitivity_sweep_tmax(functions, values, n_runs, base_seed,
                                                         base_params(base),
                                                         iwso::HarnessOptions{threads, false});
        *out = wrap(report);
    });
}

iwso_status iwso_sweep_matchmaker(const iwso_algorithm* base, const int* function_ids,
                                  size_t function_count, const char* const* cases,
                                  size_t case_count, int n_runs, uint64_t base_seed,
                                  unsigned threads, iwso_summary_list** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = nullptr;
        const auto functions = functions_from(function_ids, function_count);
        std::vector<iwso::MatchmakerCase> selected(iwso::kMatchmakerCases.begin(),
                                                   iwso::kMatchmakerCases.end());
        if (cases != nullptr) {
            require(case_count > 0, "empty case list");
            selected.clear();
            for (size_t i = 0; i < case_count; ++i) {
                require(cases[i] != nullptr, "null case name");
                const std::string name(cases[i]);
                bool found = false;
                for (const auto& c : iwso::kMatchmakerCases) {
                    if (name == c.name) {
                        selected.push_back(c);
                        found = true;
                    }
                }
                if (!found) {
                    throw iwso::LookupError("unknown matchmaker case '" + name + "'");
                }
            }
        }
        const auto report = iwso::sensitivity_sweep_matchmaker(
            functions, selected, n_runs, base_seed, base_params(base),
            iwso::HarnessOptions{threads, false});
        *out = wrap(report);
    });
}

size_t iwso_summary_list_size(const iwso_summary_list* list) {
    return list ? list->items.size() : 0;
}

const iwso_summary* iwso_summary_list_at(const iwso_summary_list* list, size_t index) {
    if (list == nullptr || index >= list->items.size()) {
        return nullptr;
    }
    return &list->items[index];
}

void iwso_summary_list_destroy(iwso_summary_list* list) { delete list; }

iwso_status iwso_summary_list_write_csv(const iwso_summary_list* list, const char* path) {
    return guarded([&] {
        require(list != nullptr, "null argument");
        std::vector<iwso::csv::SummaryRow> rows;
        rows.reserve(list->items.size());
        for (const auto& item : list->items) {
            rows.push_back(iwso::csv::summary_row(item.summary));
        }
        write_to(path, [&](std::ostream& os) { iwso::csv::write_summary(os, rows); });
    });
}

} // extern "C"
