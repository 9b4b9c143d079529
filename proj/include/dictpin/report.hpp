#pragma once

#include "dictpin/corpus.hpp"
#include "dictpin/scenario.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dictpin {

enum class OutputFormat { table, csv, json };

OutputFormat parse_output_format(std::string_view name);

// Locale-independent fixed-point rendering.
std::string format_fixed(double value, int decimals);
// Shortest round-trip representation.
std::string format_exact(double value);
// RFC 4180 quoting, only when needed.
std::string csv_field(std::string_view field);

void render_scenario(std::ostream& out, const std::string& label, const ScenarioResult& result, OutputFormat format);
void render_sweep(std::ostream& out, const std::string& label, const SweepSeries& series, OutputFormat format);

struct CorpusInspection {
    std::string label;
    ParseStats stats;
    std::size_t words = 0;     // distinct normalized words
    std::size_t retained = 0;  // count > min_count
    double min_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> length_histogram;  // over retained words
};

CorpusInspection inspect_corpus(const WordFrequencyList& list, double min_count);
void render_inspection(std::ostream& out, const CorpusInspection& info, OutputFormat format);

// One computed-vs-published comparison.
struct TableCell {
    std::string table;
    std::string scenario;
    std::string metric;
    double computed = 0;
    double published = 0;
    double delta() const { return computed - published; }
};

struct TableReport {
    std::string id;
    std::string title;
    std::vector<TableCell> cells;
    std::string skipped_reason;  // non-empty when the table could not be produced
};

struct TableInputs {
    std::optional<WordFrequencyList> subtlexus;
    std::optional<WordFrequencyList> opensub;
    std::optional<WordFrequencyList> subtlexnl;
    double min_count = 1;
};

// Runs the full scenario battery for n = 4 and 5. Tables whose corpora are
// missing come back with skipped_reason set.
std::vector<TableReport> reproduce_tables(const TableInputs& inputs);
void render_tables(std::ostream& out, const std::vector<TableReport>& tables, OutputFormat format);

}  // namespace dictpin
