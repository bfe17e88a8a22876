/*
 * C interface to the IWSO optimization library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns an iwso_status; on failure a description is
 * available from iwso_last_error() on the calling thread until the next
 * failing call on that thread.
 */
#ifndef IWSO_IWSO_H
#define IWSO_IWSO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(IWSO_BUILDING_LIBRARY)
#    define IWSO_API __declspec(dllexport)
#  else
#    define IWSO_API __declspec(dllimport)
#  endif
#else
#  define IWSO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iwso_status {
    IWSO_OK = 0,
    IWSO_ERR_INVALID_ARGUMENT = 1,
    IWSO_ERR_EVALUATION = 2,
    IWSO_ERR_LOOKUP = 3,
    IWSO_ERR_IO = 4,
    IWSO_ERR_INTERNAL = 5
} iwso_status;

typedef enum iwso_stop_reason {
    IWSO_STOP_BUDGET = 0,
    IWSO_STOP_STALL = 1,
    IWSO_STOP_TARGET = 2
} iwso_stop_reason;

typedef struct iwso_algorithm iwso_algorithm;
typedef struct iwso_run iwso_run;
typedef struct iwso_summary iwso_summary;
typedef struct iwso_summary_list iwso_summary_list;

IWSO_API const char* iwso_version(void);
IWSO_API const char* iwso_last_error(void);

/* ---- benchmark registry ------------------------------------------------ */

typedef struct iwso_function_info {
    int id;            /* 1..23 */
    const char* name;  /* static storage */
    int multimodal;
    int separable;
    size_t default_dim;
    double lower;
    double upper;
    int fixed_dim;
    int noisy;
    int ambiguous;
    int has_optimum;
    double optimum_value;
} iwso_function_info;

IWSO_API size_t iwso_function_count(void);
/* Accepts "f7" or a registry name such as "griewank". */
IWSO_API iwso_status iwso_function_lookup(const char* text, int* id_out);
IWSO_API iwso_status iwso_function_info_get(int id, iwso_function_info* out);
/* noise_seed seeds the draw source used by noisy functions only. */
IWSO_API iwso_status iwso_function_evaluate(int id, const double* x, size_t dim,
                                            uint64_t noise_seed, double* out);
/* path NULL writes to stdout. */
IWSO_API iwso_status iwso_registry_write_csv(const char* path);

/* ---- algorithm configuration ------------------------------------------- */

/* name: "iwso", "ga", "pso" or "de". Starts from the reference defaults. */
IWSO_API iwso_status iwso_algorithm_create(const char* name, iwso_algorithm** out);
IWSO_API void iwso_algorithm_destroy(iwso_algorithm* algorithm);
IWSO_API const char* iwso_algorithm_name(const iwso_algorithm* algorithm);

/*
 * Keys, iwso: pop_size t_max m_max m_min alpha_min alpha_max beta gamma
 *             stall_limit target_fitness r1
 * Keys, ga/pso/de: pop_size t_max crossover_rate mutation_rate mutation_scale
 *             tournament_size w c1 c2 velocity_max f cr
 * Integer keys reject fractional values. Unknown keys fail with
 * IWSO_ERR_INVALID_ARGUMENT. Cross-field checks happen in _validate.
 * stall_limit 0 means no limit (also what _get reports when unset); the optional
 * target_fitness and r1 read back as NaN when unset.
 */
IWSO_API iwso_status iwso_algorithm_set(iwso_algorithm* algorithm, const char* key, double value);
IWSO_API iwso_status iwso_algorithm_get(const iwso_algorithm* algorithm, const char* key,
                                        double* out);
IWSO_API iwso_status iwso_algorithm_validate(const iwso_algorithm* algorithm);

/* ---- single runs -------------------------------------------------------- */

typedef struct iwso_trace_record {
    int iteration;
    double best_fitness;
    double mean_fitness;
    double matchmaker_m;
    double alpha;
    double e_match;
    int eliminated_count;
} iwso_trace_record;

IWSO_API iwso_status iwso_optimize(const iwso_algorithm* algorithm, int function_id,
                                   uint64_t seed, iwso_run** out);
IWSO_API void iwso_run_destroy(iwso_run* run);
IWSO_API double iwso_run_best_fitness(const iwso_run* run);
IWSO_API size_t iwso_run_dim(const iwso_run* run);
IWSO_API iwso_status iwso_run_best_point(const iwso_run* run, double* out, size_t capacity);
IWSO_API uint64_t iwso_run_evaluations(const iwso_run* run);
IWSO_API uint64_t iwso_run_seed(const iwso_run* run);
IWSO_API double iwso_run_runtime_ms(const iwso_run* run);
IWSO_API iwso_stop_reason iwso_run_stop_reason(const iwso_run* run);
IWSO_API size_t iwso_run_trace_length(const iwso_run* run);
IWSO_API iwso_status iwso_run_trace_record(const iwso_run* run, size_t index,
                                           iwso_trace_record* out);
IWSO_API iwso_status iwso_run_write_trace_csv(const iwso_run* run, const char* path);

/* ---- replicated experiments -------------------------------------------- */

typedef struct iwso_summary_stats {
    int n_runs;
    double mean;
    double std;
    double best;
    double mean_runtime_ms;
} iwso_summary_stats;

/* threads 0 = hardware concurrency. keep_runs retains traces for
 * iwso_summary_run. */
IWSO_API iwso_status iwso_run_replicates(const iwso_algorithm* algorithm, int function_id,
                                         int n_runs, uint64_t base_seed, unsigned threads,
                                         int keep_runs, iwso_summary** out);
IWSO_API void iwso_summary_destroy(iwso_summary* summary);
IWSO_API iwso_status iwso_summary_stats_get(const iwso_summary* summary, iwso_summary_stats* out);
IWSO_API const char* iwso_summary_algorithm(const iwso_summary* summary);
IWSO_API const char* iwso_summary_function(const iwso_summary* summary);
/* Borrowed; NULL when runs were not kept or index is out of range. */
IWSO_API const iwso_run* iwso_summary_run(const iwso_summary* summary, size_t index);
IWSO_API iwso_status iwso_summary_write_results_csv(const iwso_summary* summary, const char* path);

/* Identical budgets and distinct algorithm names are required. */
IWSO_API iwso_status iwso_compare(const iwso_algorithm* const* algorithms, size_t count,
                                  int function_id, int n_runs, uint64_t base_seed,
                                  unsigned threads, iwso_summary_list** out);

/* base: an "iwso" algorithm or NULL for defaults. grid NULL = 125,250,375,500. */
IWSO_API iwso_status iwso_sweep_tmax(const iwso_algorithm* base, const int* function_ids,
                                     size_t function_count, const int* grid, size_t grid_count,
                                     int n_runs, uint64_t base_seed, unsigned threads,
                                     iwso_summary_list** out);
/* cases: names among "C1".."C4"; NULL = all four. */
IWSO_API iwso_status iwso_sweep_matchmaker(const iwso_algorithm* base, const int* function_ids,
                                           size_t function_count, const char* const* cases,
                                           size_t case_count, int n_runs, uint64_t base_seed,
                                           unsigned threads, iwso_summary_list** out);

IWSO_API size_t iwso_summary_list_size(const iwso_summary_list* list);
IWSO_API const iwso_summary* iwso_summary_list_at(const iwso_summary_list* list, size_t index);
IWSO_API void iwso_summary_list_destroy(iwso_summary_list* list);
IWSO_API iwso_status iwso_summary_list_write_csv(const iwso_summary_list* list, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* IWSO_IWSO_H */
