#include "iwso/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <system_error>

#include "iwso/benchmarks.hpp"
#include "iwso/error.hpp"

namespace iwso::csv {

namespace {

std::string quote(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

template <typename Int>
Int parse_int(std::string_view field) {
    Int value{};
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw InvalidArgument("csv: '" + std::string(field) + "' is not an integer");
    }
    return value;
}

std::vector<std::vector<std::string>> read_table(std::istream& in, std::string_view header) {
    std::string line;
    if (!std::getline(in, line)) {
        throw InvalidArgument("csv: missing header");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != header) {
        throw InvalidArgument("csv: unexpected header '" + line + "'");
    }
    const std::size_t columns = split_record(header).size();
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto fields = split_record(line);
        if (fields.size() != columns) {
            throw InvalidArgument("csv: expected " + std::to_string(columns) + " fields, got " +
                                  std::to_string(fields.size()));
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

double to_ms(std::chrono::duration<double> d) {
    return std::chrono::duration<double, std::milli>(d).count();
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        throw InvalidArgument("csv: cannot format value");
    }
    return std::string(buf, ptr);
}

double parse_double(std::string_view field) {
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        throw InvalidArgument("csv: '" + std::string(field) + "' is not a number");
    }
    return value;
}

std::vector<std::string> split_record(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (quoted) {
        throw InvalidArgument("csv: unterminated quoted field");
    }
    fields.push_back(std::move(current));
    return fields;
}

std::vector<ResultRow> result_rows(const StatsSummary& summary) {
    std::vector<ResultRow> rows;
    rows.reserve(summary.per_run.size());
    int id = 1;
    for (const RunRecord& r : summary.per_run) {
        rows.push_back(ResultRow{id++, summary.algorithm, summary.function, r.seed, r.best_fitness,
                                 r.evaluations, to_ms(r.runtime), r.stop_reason});
    }
    return rows;
}

SummaryRow summary_row(const StatsSummary& summary) {
    return SummaryRow{summary.algorithm, summary.function, summary.n_runs, summary.mean,
                      summary.std,       summary.best,     to_ms(summary.mean_runtime)};
}

void write_results(std::ostream& out, std::span<const ResultRow> rows) {
    out << kResultsHeader << '\n';
    for (const ResultRow& r : rows) {
        out << r.run_id << ',' << quote(r.algorithm) << ',' << quote(r.function) << ',' << r.seed
            << ',' << format_double(r.best_fitness) << ',' << r.evaluations << ','
            << format_double(r.runtime_ms) << ',' << to_string(r.stop_reason) << '\n';
    }
}

void write_trace(std::ostream& out, std::span<const TraceRecord> trace) {
    out << kTraceHeader << '\n';
    for (const TraceRecord& t : trace) {
        out << t.iteration << ',' << format_double(t.best_fitness) << ','
            << format_double(t.mean_fitness) << ',' << format_double(t.m) << ','
            << format_double(t.alpha) << ',' << format_double(t.e_match) << ',' << t.eliminated
            << '\n';
    }
}

void write_summary(std::ostream& out, std::span<const SummaryRow> rows) {
    out << kSummaryHeader << '\n';
    for (const SummaryRow& r : rows) {
        out << quote(r.algorithm) << ',' << quote(r.function) << ',' << r.n_runs << ','
            << format_double(r.mean) << ',' << format_double(r.std) << ','
            << format_double(r.best) << ',' << format_double(r.mean_runtime_ms) << '\n';
    }
}

void write_registry(std::ostream& out) {
    out << kRegistryHeader << '\n';
    for (bench::FunctionId id : bench::all_functions()) {
        const bench::FunctionSpec& spec = bench::function_spec(id);
        out << bench::to_string(id) << ',' << quote(spec.name) << ','
            << (spec.modality == bench::Modality::unimodal ? "unimodal" : "multimodal") << ','
            << (spec.separability == bench::Separability::separable ? "separable"
                                                                     : "nonseparable")
            << ',' << spec.default_dim << ',' << format_double(spec.lower) << ','
            << format_double(spec.upper) << ',';
        if (spec.known_optimum) {
            out << format_double(spec.known_optimum->value);
        }
        out << '\n';
    }
}

std::vector<ResultRow> read_results(std::istream& in) {
    std::vector<ResultRow> rows;
    for (auto& f : read_table(in, kResultsHeader)) {
        rows.push_back(ResultRow{parse_int<int>(f[0]), f[1], f[2], parse_int<std::uint64_t>(f[3]),
                                 parse_double(f[4]), parse_int<std::uint64_t>(f[5]),
                                 parse_double(f[6]), parse_stop_reason(f[7])});
    }
    return rows;
}

std::vector<TraceRecord> read_trace(std::istream& in) {
    std::vector<TraceRecord> rows;
    for (auto& f : read_table(in, kTraceHeader)) {
        rows.push_back(TraceRecord{parse_int<int>(f[0]), parse_double(f[1]), parse_double(f[2]),
                                   parse_double(f[3]), parse_double(f[4]), parse_double(f[5]),
                                   parse_int<int>(f[6])});
    }
    return rows;
}

std::vector<SummaryRow> read_summary(std::istream& in) {
    std::vector<SummaryRow> rows;
    for (auto& f : read_table(in, kSummaryHeader)) {
        rows.push_back(SummaryRow{f[0], f[1], parse_int<int>(f[2]), parse_double(f[3]),
                                  parse_double(f[4]), parse_double(f[5]), parse_double(f[6])});
    }
    return rows;
}

} // namespace iwso::csv
