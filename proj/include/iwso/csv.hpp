#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iwso/harness.hpp"
#include "iwso/optimizer.hpp"

namespace iwso::csv {

inline constexpr std::string_view kResultsHeader =
    "run_id,algorithm,function,seed,best_fitness,evaluations,runtime_ms,stop_reason";
inline constexpr std::string_view kTraceHeader =
    "iteration,best_fitness,mean_fitness,matchmaker_m,alpha,e_match,eliminated_count";
inline constexpr std::string_view kSummaryHeader =
    "algorithm,function,n_runs,mean,std,best,mean_runtime_ms";
inline constexpr std::string_view kRegistryHeader =
    "id,name,modality,separability,dim,lower,upper,optimum_value";

struct ResultRow {
    int run_id = 0;
    std::string algorithm;
    std::string function;
    std::uint64_t seed = 0;
    double best_fitness = 0.0;
    std::uint64_t evaluations = 0;
    double runtime_ms = 0.0;
    StopReason stop_reason = StopReason::budget;

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct SummaryRow {
    std::string algorithm;
    std::string function;
    int n_runs = 0;
    double mean = 0.0;
    double std = 0.0;
    double best = 0.0;
    double mean_runtime_ms = 0.0;

    friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);
/// Throws InvalidArgument unless the whole field is a number.
double parse_double(std::string_view field);

/// Splits one CSV record, honouring double-quoted fields.
std::vector<std::string> split_record(std::string_view line);

/// Result rows are numbered from 1 in per_run order.
std::vector<ResultRow> result_rows(const StatsSummary& summary);
SummaryRow summary_row(const StatsSummary& summary);

void write_results(std::ostream& out, std::span<const ResultRow> rows);
void write_trace(std::ostream& out, std::span<const TraceRecord> trace);
void write_summary(std::ostream& out, std::span<const SummaryRow> rows);
/// One row per registry entry, in id order.
void write_registry(std::ostream& out);

/// Readers reject a wrong header or malformed rows with InvalidArgument.
std::vector<ResultRow> read_results(std::istream& in);
std::vector<TraceRecord> read_trace(std::istream& in);
std::vector<SummaryRow> read_summary(std::istream& in);

} // namespace iwso::csv
