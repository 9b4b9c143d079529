#include "dictpin/report.hpp"

#include "dictpin/error.hpp"
#include "dictpin/published.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <functional>
#include <map>
#include <ostream>
#include <thread>

namespace dictpin {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string pad_left(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.insert(0, width - s.size(), ' ');
    return s;
}

std::string pad_right(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

std::string signed_fixed(double v, int decimals)
{
    std::string s = format_fixed(v, decimals);
    if (s.front() != '-')
        return "+" + s;
    if (s.find_first_not_of("-0.") == std::string::npos)
        return "+" + s.substr(1);
    return s;
}

std::string alpha_label(double alpha)
{
    return format_exact(alpha);
}

const std::vector<std::string>& record_columns()
{
    static const std::vector<std::string> cols = {
        "entropy_bits",       "lambda_beta",           "guesswork", "guesswork_bits",
        "marginal_guesswork", "marginal_guesswork_bits", "alpha",     "beta",
        "support_size",       "pin_space",
    };
    return cols;
}

std::vector<std::string> record_values(const MetricsRecord& r)
{
    return {format_exact(r.entropy_bits),
            format_exact(r.marginal_success),
            format_exact(r.guesswork),
            format_exact(r.guesswork_bits),
            std::to_string(r.marginal_guesswork),
            format_exact(r.marginal_guesswork_bits),
            format_exact(r.alpha),
            std::to_string(r.beta),
            std::to_string(r.support_size),
            std::to_string(r.pin_space)};
}

void add_record(ordered_json& j, const MetricsRecord& r)
{
    j["entropy_bits"] = r.entropy_bits;
    j["lambda_beta"] = r.marginal_success;
    j["guesswork"] = r.guesswork;
    j["guesswork_bits"] = r.guesswork_bits;
    j["marginal_guesswork"] = r.marginal_guesswork;
    j["marginal_guesswork_bits"] = r.marginal_guesswork_bits;
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
    j["support_size"] = r.support_size;
    j["pin_space"] = r.pin_space;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out << ',';
        out << csv_field(fields[i]);
    }
    out << "\r\n";
}

// Metric rows for the human table.
void write_metric_rows(std::ostream& out, const MetricsRecord& r)
{
    const auto row = [&](const std::string& name, const std::string& value) {
        out << "  " << pad_right(name, 22) << pad_left(value, 14) << '\n';
    };
    const auto a = alpha_label(r.alpha);
    const auto b = std::to_string(r.beta);
    row("H1 (bits)", format_fixed(r.entropy_bits, 2));
    row("G (guesses)", format_fixed(r.guesswork, 2));
    row("G~ (bits)", format_fixed(r.guesswork_bits, 2));
    row("mu_" + a + " (guesses)", std::to_string(r.marginal_guesswork));
    row("mu~_" + a + " (bits)", format_fixed(r.marginal_guesswork_bits, 2));
    row("lambda_" + b + " (%)", format_fixed(100.0 * r.marginal_success, 2));
}

}  // namespace

OutputFormat parse_output_format(std::string_view name)
{
    if (name == "table")
        return OutputFormat::table;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw ConfigError("unknown output format '" + std::string(name) + "'");
}

std::string format_fixed(double value, int decimals)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    return std::string(buf, res.ptr);
}

std::string format_exact(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view field)
{
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void render_scenario(std::ostream& out, const std::string& label, const ScenarioResult& result, OutputFormat format)
{
    const auto& r = result.metrics;
    switch (format) {
    case OutputFormat::table: {
        out << "scenario  " << label << '\n';
        out << "support   " << r.support_size << " of " << r.pin_space << " PINs\n\n";
        write_metric_rows(out, r);
        out << "\n  summary  " << format_fixed(r.entropy_bits, 2) << " / " << format_fixed(r.guesswork_bits, 2) << " / "
            << format_fixed(r.marginal_guesswork_bits, 2) << " / " << format_fixed(100.0 * r.marginal_success, 2)
            << '\n';
        if (result.monte_carlo) {
            const auto& mc = *result.monte_carlo;
            out << "\n  monte carlo (" << mc.samples << " samples)\n";
            out << "  " << pad_right("lambda_" + std::to_string(mc.beta) + " (%)", 22)
                << pad_left(format_fixed(100.0 * mc.hit_rate, 2), 14) << '\n';
            out << "  " << pad_right("mean rank", 22) << pad_left(format_fixed(mc.mean_rank, 2), 14) << '\n';
        }
        if (!result.top.empty()) {
            out << "\ntop " << result.top.size() << " PINs\n";
            out << "  rank  " << pad_right("pin", 10) << pad_left("probability", 12) << pad_left("percent", 10) << '\n';
            for (std::size_t i = 0; i < result.top.size(); ++i)
                out << "  " << pad_left(std::to_string(i + 1), 4) << "  " << pad_right(result.top[i].pin, 10)
                    << pad_left(format_fixed(result.top[i].probability, 4), 12)
                    << pad_left(format_fixed(100.0 * result.top[i].probability, 2), 10) << '\n';
        }
        break;
    }
    case OutputFormat::csv: {
        std::vector<std::string> header = {"scenario"};
        header.insert(header.end(), record_columns().begin(), record_columns().end());
        header.insert(header.end(), {"mc_samples", "mc_lambda_beta", "mc_mean_rank"});
        write_csv_row(out, header);
        std::vector<std::string> row = {label};
        const auto values = record_values(r);
        row.insert(row.end(), values.begin(), values.end());
        if (result.monte_carlo)
            row.insert(row.end(), {std::to_string(result.monte_carlo->samples),
                                   format_exact(result.monte_carlo->hit_rate),
                                   format_exact(result.monte_carlo->mean_rank)});
        else
            row.insert(row.end(), {"", "", ""});
        write_csv_row(out, row);
        break;
    }
    case OutputFormat::json: {
        auto arr = ordered_json::array();
        ordered_json rec;
        rec["kind"] = "metrics";
        rec["scenario"] = label;
        add_record(rec, r);
        arr.push_back(rec);
        if (result.monte_carlo) {
            ordered_json mc;
            mc["kind"] = "monte_carlo";
            mc["scenario"] = label;
            mc["samples"] = result.monte_carlo->samples;
            mc["beta"] = result.monte_carlo->beta;
            mc["lambda_beta"] = result.monte_carlo->hit_rate;
            mc["mean_rank"] = result.monte_carlo->mean_rank;
            arr.push_back(mc);
        }
        for (std::size_t i = 0; i < result.top.size(); ++i) {
            ordered_json t;
            t["kind"] = "top_pin";
            t["scenario"] = label;
            t["rank"] = i + 1;
            t["pin"] = result.top[i].pin;
            t["probability"] = result.top[i].probability;
            arr.push_back(t);
        }
        out << arr.dump(2) << '\n';
        break;
    }
    }
}

void render_sweep(std::ostream& out, const std::string& label, const SweepSeries& series, OutputFormat format)
{
    switch (format) {
    case OutputFormat::table: {
        out << "scenario  " << label << "\nsweep     " << to_string(series.mode) << " blacklist\n\n";
        const auto beta = series.points.empty() ? std::size_t{6} : series.points.front().metrics.beta;
        out << pad_left("k", 6) << pad_left("H1", 10) << pad_left("G~", 10) << pad_left("mu~", 10)
            << pad_left("lambda_" + std::to_string(beta) + "%", 12) << pad_left("lambda_3%", 12) << '\n';
        for (const auto& p : series.points)
            out << pad_left(std::to_string(p.k), 6) << pad_left(format_fixed(p.metrics.entropy_bits, 2), 10)
                << pad_left(format_fixed(p.metrics.guesswork_bits, 2), 10)
                << pad_left(format_fixed(p.metrics.marginal_guesswork_bits, 2), 10)
                << pad_left(format_fixed(100.0 * p.metrics.marginal_success, 2), 12)
                << pad_left(format_fixed(100.0 * p.lambda_3, 2), 12) << '\n';
        break;
    }
    case OutputFormat::csv: {
        std::vector<std::string> header = {"k"};
        header.insert(header.end(), record_columns().begin(), record_columns().end());
        header.insert(header.end(), {"lambda_3", "mode", "scenario"});
        write_csv_row(out, header);
        for (const auto& p : series.points) {
            std::vector<std::string> row = {std::to_string(p.k)};
            const auto values = record_values(p.metrics);
            row.insert(row.end(), values.begin(), values.end());
            row.insert(row.end(), {format_exact(p.lambda_3), std::string(to_string(series.mode)), label});
            write_csv_row(out, row);
        }
        break;
    }
    case OutputFormat::json: {
        auto arr = ordered_json::array();
        for (const auto& p : series.points) {
            ordered_json rec;
            rec["k"] = p.k;
            add_record(rec, p.metrics);
            rec["lambda_3"] = p.lambda_3;
            rec["mode"] = to_string(series.mode);
            rec["scenario"] = label;
            arr.push_back(rec);
        }
        out << arr.dump(2) << '\n';
        break;
    }
    }
}

CorpusInspection inspect_corpus(const WordFrequencyList& list, double min_count)
{
    CorpusInspection info;
    info.label = list.source_label();
    info.stats = list.stats();
    info.words = list.size();
    info.min_count = min_count;
    std::map<std::size_t, std::size_t> hist;
    for (const auto& e : list.entries())
        if (e.count > min_count) {
            ++info.retained;
            ++hist[e.word.size()];
        }
    info.length_histogram.assign(hist.begin(), hist.end());
    return info;
}

void render_inspection(std::ostream& out, const CorpusInspection& info, OutputFormat format)
{
    switch (format) {
    case OutputFormat::table:
        out << "corpus          " << info.label << '\n';
        out << "lines read      " << info.stats.lines_read << '\n';
        out << "words           " << info.words << '\n';
        out << "count > " << pad_right(format_exact(info.min_count), 8) << info.retained << '\n';
        out << "merged lines    " << info.stats.merged << '\n';
        out << "skipped         " << info.stats.skipped() << " (malformed " << info.stats.malformed
            << ", non-letter words " << info.stats.rejected_words << ")\n";
        out << "blank lines     " << info.stats.blank << "\n\n";
        out << "length  words\n";
        for (const auto& [len, n] : info.length_histogram)
            out << pad_left(std::to_string(len), 6) << "  " << n << '\n';
        break;
    case OutputFormat::csv:
        write_csv_row(out, {"length", "words"});
        for (const auto& [len, n] : info.length_histogram)
            write_csv_row(out, {std::to_string(len), std::to_string(n)});
        break;
    case OutputFormat::json: {
        ordered_json j;
        j["corpus"] = info.label;
        j["lines_read"] = info.stats.lines_read;
        j["words"] = info.words;
        j["min_count"] = info.min_count;
        j["retained"] = info.retained;
        j["merged"] = info.stats.merged;
        j["malformed"] = info.stats.malformed;
        j["rejected_words"] = info.stats.rejected_words;
        j["blank"] = info.stats.blank;
        auto hist = ordered_json::object();
        for (const auto& [len, n] : info.length_histogram)
            hist[std::to_string(len)] = n;
        j["length_histogram"] = hist;
        out << j.dump(2) << '\n';
        break;
    }
    }
}

namespace {

struct Job {
    ScenarioConfig config;
    std::vector<const WordFrequencyList*> corpora;
};

std::vector<ScenarioResult> evaluate_all(const std::vector<Job>& jobs)
{
    std::vector<std::optional<ScenarioResult>> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                const auto& refs = jobs[i].corpora;
                if (refs.size() == 1) {
                    results[i] = run_scenario(jobs[i].config, std::span(refs.front(), 1));
                } else {
                    std::vector<WordFrequencyList> corpora;
                    for (const auto* c : refs)
                        corpora.push_back(*c);
                    results[i] = run_scenario(jobs[i].config, corpora);
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::min<std::size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    std::vector<ScenarioResult> out;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        out.push_back(std::move(*results[i]));
    }
    return out;
}

ScenarioConfig battery_config(std::vector<std::string> roles, double min_count, std::size_t n)
{
    ScenarioConfig c;
    for (auto& r : roles)
        c.dicts.emplace_back(std::move(r));
    c.min_count = min_count;
    c.pin_length = n;
    return c;
}

void add_row_cells(TableReport& table, const std::string& scenario, const MetricsRecord& r,
                   const published::Row& ref)
{
    table.cells.push_back({table.id, scenario, "H1 (bits)", r.entropy_bits, ref.entropy_bits});
    table.cells.push_back({table.id, scenario, "G~ (bits)", r.guesswork_bits, ref.guesswork_bits});
    table.cells.push_back({table.id, scenario, "mu~_0.5 (bits)", r.marginal_guesswork_bits, ref.marginal_guesswork_bits});
    table.cells.push_back({table.id, scenario, "lambda_6 (%)", 100.0 * r.marginal_success, ref.lambda6_percent});
}

// Queued scenario plus what to do with its result.
struct Pending {
    std::size_t table;
    std::function<void(TableReport&, const ScenarioResult&)> emit;
};

}  // namespace

std::vector<TableReport> reproduce_tables(const TableInputs& in)
{
    std::vector<TableReport> tables = {
        {"baseline", "straightforward construction, standard mapping", {}, {}},
        {"top-pins", "most frequent PINs, SUBTLEXus, standard mapping", {}, {}},
        {"construction", "stretched mapping, prefix and morphing methods (SUBTLEXus)", {}, {}},
        {"blacklist", "PIN blacklist on top of the prefix and morphing methods (SUBTLEXus)", {}, {}},
        {"two-dictionary", "SUBTLEXus and SUBTLEXnl chosen with probability 1/2", {}, {}},
    };
    enum { baseline, top_pins, construction, blacklist, two_dict };

    std::vector<Job> jobs;
    std::vector<Pending> pending;
    const auto queue = [&](std::size_t table, ScenarioConfig cfg, std::vector<const WordFrequencyList*> corpora,
                           std::function<void(TableReport&, const ScenarioResult&)> emit) {
        jobs.push_back({std::move(cfg), std::move(corpora)});
        pending.push_back({table, std::move(emit)});
    };
    for (std::size_t n : {std::size_t{4}, std::size_t{5}}) {
        const std::size_t ix = n - 4;
        const auto add = [&](std::size_t table, ScenarioConfig cfg, std::vector<const WordFrequencyList*> corpora,
                             const published::Row& ref) {
            const auto label = describe(cfg);
            queue(table, std::move(cfg), std::move(corpora),
                  [label, ref](TableReport& t, const ScenarioResult& r) { add_row_cells(t, label, r.metrics, ref); });
        };

        if (in.subtlexus)
            add(baseline, battery_config({"subtlexus"}, in.min_count, n), {&*in.subtlexus},
                published::subtlexus_basic[ix]);
        if (in.opensub)
            add(baseline, battery_config({"opensub"}, in.min_count, n), {&*in.opensub}, published::opensub_basic[ix]);

        if (in.subtlexus) {
            auto cfg = battery_config({"subtlexus"}, in.min_count, n);
            const auto label = describe(cfg);
            cfg.top = 6;
            queue(top_pins, cfg, {&*in.subtlexus}, [label, n](TableReport& t, const ScenarioResult& r) {
                const auto& ref = n == 4 ? published::subtlexus_top_n4 : published::subtlexus_top_n5;
                for (std::size_t i = 0; i < ref.size(); ++i) {
                    const std::string pin(ref[i].pin);
                    t.cells.push_back({t.id, label, "P(" + pin + ") (%)", 100.0 * r.distribution.mass(pin),
                                       ref[i].percent});
                    t.cells.push_back({t.id, label, "rank " + std::to_string(i + 1) + " = " + r.top[i].pin + " (%)",
                                       100.0 * r.top[i].probability, ref[i].percent});
                }
            });

            auto stretched = battery_config({"subtlexus"}, in.min_count, n);
            stretched.mapping = "stretched";
            add(construction, stretched, {&*in.subtlexus}, published::subtlexus_stretched[ix]);
            auto prefix = battery_config({"subtlexus"}, in.min_count, n);
            prefix.strategy = Strategy::prefix;
            add(construction, prefix, {&*in.subtlexus}, published::subtlexus_prefix[ix]);
            auto morph = battery_config({"subtlexus"}, in.min_count, n);
            morph.morph = true;
            add(construction, morph, {&*in.subtlexus}, published::subtlexus_morph[ix]);

            for (const auto* rows : {&published::prefix_blacklisted, &published::morph_blacklisted}) {
                for (const auto& ref : *rows) {
                    auto cfg = battery_config({"subtlexus"}, in.min_count, n);
                    if (rows == &published::prefix_blacklisted)
                        cfg.strategy = Strategy::prefix;
                    else
                        cfg.morph = true;
                    cfg.blacklist = {BlacklistMode::pin, ref.k};
                    const auto label = describe(cfg);
                    const double h = ref.entropy_bits[ix];
                    const double l = ref.lambda6_percent[ix];
                    queue(blacklist, cfg, {&*in.subtlexus}, [label, h, l](TableReport& t, const ScenarioResult& r) {
                        t.cells.push_back({t.id, label, "H1 (bits)", r.metrics.entropy_bits, h});
                        t.cells.push_back({t.id, label, "lambda_6 (%)", 100.0 * r.metrics.marginal_success, l});
                    });
                }
            }
        }

        if (in.subtlexus && in.subtlexnl) {
            const std::vector<const WordFrequencyList*> both = {&*in.subtlexus, &*in.subtlexnl};
            add(two_dict, battery_config({"subtlexus", "subtlexnl"}, in.min_count, n), both,
                published::two_dict_basic[ix]);
            auto prefix = battery_config({"subtlexus", "subtlexnl"}, in.min_count, n);
            prefix.strategy = Strategy::prefix;
            add(two_dict, prefix, both, published::two_dict_prefix[ix]);
            prefix.blacklist = {BlacklistMode::pin, 10};
            add(two_dict, prefix, both, published::two_dict_prefix_bl10[ix]);
        }
    }

    const auto results = evaluate_all(jobs);
    for (std::size_t i = 0; i < results.size(); ++i)
        pending[i].emit(tables[pending[i].table], results[i]);

    if (!in.subtlexus && !in.opensub)
        tables[baseline].skipped_reason = "requires a SUBTLEXus (--subtlexus) or opensub (--opensub) corpus";
    if (!in.subtlexus) {
        for (auto t : {top_pins, construction, blacklist})
            tables[t].skipped_reason = "requires a SUBTLEXus corpus (--subtlexus)";
    }
    if (!in.subtlexus || !in.subtlexnl)
        tables[two_dict].skipped_reason = "requires both SUBTLEXus (--subtlexus) and SUBTLEXnl (--subtlexnl) corpora";
    return tables;
}

void render_tables(std::ostream& out, const std::vector<TableReport>& tables, OutputFormat format)
{
    switch (format) {
    case OutputFormat::table: {
        bool first = true;
        for (const auto& t : tables) {
            if (!first)
                out << '\n';
            first = false;
            out << "== " << t.id << ": " << t.title << " ==\n";
            if (!t.skipped_reason.empty()) {
                out << "  skipped: " << t.skipped_reason << '\n';
                continue;
            }
            std::size_t scen_w = 8, metric_w = 6;
            for (const auto& c : t.cells) {
                scen_w = std::max(scen_w, c.scenario.size());
                metric_w = std::max(metric_w, c.metric.size());
            }
            out << "  " << pad_right("scenario", scen_w + 2) << pad_right("metric", metric_w + 2)
                << pad_left("computed", 10) << pad_left("published", 11) << pad_left("delta", 9) << '\n';
            for (const auto& c : t.cells)
                out << "  " << pad_right(c.scenario, scen_w + 2) << pad_right(c.metric, metric_w + 2)
                    << pad_left(format_fixed(c.computed, 2), 10) << pad_left(format_fixed(c.published, 2), 11)
                    << pad_left(signed_fixed(c.delta(), 2), 9) << '\n';
        }
        break;
    }
    case OutputFormat::csv:
        write_csv_row(out, {"table", "scenario", "metric", "computed", "published", "delta"});
        for (const auto& t : tables)
            for (const auto& c : t.cells)
                write_csv_row(out, {c.table, c.scenario, c.metric, format_exact(c.computed),
                                    format_exact(c.published), format_exact(c.delta())});
        break;
    case OutputFormat::json: {
        auto arr = ordered_json::array();
        for (const auto& t : tables)
            for (const auto& c : t.cells) {
                ordered_json rec;
                rec["table"] = c.table;
                rec["scenario"] = c.scenario;
                rec["metric"] = c.metric;
                rec["computed"] = c.computed;
                rec["published"] = c.published;
                rec["delta"] = c.delta();
                arr.push_back(rec);
            }
        out << arr.dump(2) << '\n';
        break;
    }
    }
}

}  // namespace dictpin
