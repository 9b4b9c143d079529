#include "dictpin/cli.hpp"

#include "dictpin/error.hpp"
#include "dictpin/report.hpp"
#include "dictpin/scenario.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <map>
#include <ostream>

namespace dictpin::cli {

namespace {

// Raw flag values; converted through apply_setting so the config file and the
// command line share one validation path.
struct ScenarioFlags {
    std::vector<std::string> dicts;
    std::map<std::string, std::string> values;
    std::map<std::string, bool> switches;
    std::string config_file;
};

const char* const value_keys[] = {"dict-format", "word-col",       "count-col",  "min-count", "pin-length",
                                  "mapping",     "strategy",       "blacklist",  "blacklist-mode",
                                  "mix-weight",  "alpha",          "beta",       "top",
                                  "seed",        "mc-samples"};

void add_format_options(CLI::App* app, ScenarioFlags& f)
{
    app->add_option("--dict-format", f.values["dict-format"], "Column separator: tsv, csv, space, or one character");
    app->add_option("--word-col", f.values["word-col"], "Zero-based word column (default 0)");
    app->add_option("--count-col", f.values["count-col"], "Zero-based count column (default 1)");
    app->add_flag("--header", f.switches["header"], "Skip the first line of each frequency list");
    app->add_flag("--strict", f.switches["strict"], "Fail on the first malformed or non-letter line");
    app->add_option("--min-count", f.values["min-count"], "Keep words with count strictly above this (default 1)");
}

void add_scenario_options(CLI::App* app, ScenarioFlags& f)
{
    app->add_option("--dict", f.dicts, "Frequency list (repeat once to mix two dictionaries)");
    add_format_options(app, f);
    app->add_option("--pin-length", f.values["pin-length"], "PIN length n (default 4)");
    app->add_option("--mapping", f.values["mapping"], "standard, stretched, or a letter=digit mapping file");
    app->add_option("--strategy", f.values["strategy"], "basic or prefix (default basic)");
    app->add_flag("--morph", f.switches["morph"], "Replace one random position with a random digit");
    app->add_option("--blacklist", f.values["blacklist"], "Number of most frequent items to forbid");
    app->add_option("--blacklist-mode", f.values["blacklist-mode"], "pin or word (default pin)");
    app->add_option("--mix-weight", f.values["mix-weight"], "Probability of choosing the first dictionary (0.5)");
    app->add_option("--alpha", f.values["alpha"], "Marginal guesswork threshold (default 0.5)");
    app->add_option("--beta", f.values["beta"], "Marginal success attempt budget (default 6)");
    app->add_option("--top", f.values["top"], "Number of top PINs to list (default 10)");
    app->add_option("--seed", f.values["seed"], "Monte Carlo seed (default 1)");
    app->add_option("--mc-samples", f.values["mc-samples"], "Monte Carlo samples; 0 disables the cross-check");
    app->add_option("--config", f.config_file, "key=value scenario file; command-line flags take precedence");
}

ScenarioConfig build_config(const CLI::App* app, const ScenarioFlags& f)
{
    ScenarioConfig config;
    if (!f.config_file.empty()) {
        for (const auto& [key, value] : load_settings_file(f.config_file))
            apply_setting(config, key, value);
    }
    if (!f.dicts.empty()) {
        config.dicts.clear();
        for (const auto& d : f.dicts)
            apply_setting(config, "dict", d);
    }
    for (const char* key : value_keys) {
        const std::string flag = std::string("--") + key;
        if (app->get_option_no_throw(flag) && app->count(flag) > 0)
            apply_setting(config, key, f.values.at(key));
    }
    for (const auto& [key, on] : f.switches)
        if (app->count("--" + key) > 0)
            apply_setting(config, key, on ? "true" : "false");
    config.validate();
    return config;
}

void print_stages(std::ostream& err, const ScenarioResult& result)
{
    for (const auto& s : result.stages)
        err << "[stage] " << s.stage << ": support " << s.support << ", removed mass "
            << format_fixed(100.0 * s.removed_mass, 4) << "%\n";
}

std::optional<WordFrequencyList> load_optional(const std::string& path, const ListFormat& format)
{
    if (path.empty())
        return std::nullopt;
    return load_frequency_list(resolve_corpus_path(path), format);
}

// Defaults a missing corpus flag to $DICTPIN_CORPUS_DIR/<name>.tsv when present.
std::string default_corpus(const std::string& given, const char* name)
{
    if (!given.empty())
        return given;
    const char* dir = std::getenv("DICTPIN_CORPUS_DIR");
    if (!dir || !*dir)
        return {};
    std::error_code ec;
    auto candidate = std::filesystem::path(dir) / (std::string(name) + ".tsv");
    return std::filesystem::exists(candidate, ec) ? candidate.string() : std::string{};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Security metrics for dictionary-derived PINs"};
    app.require_subcommand(1);
    std::string output = "table";
    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", output, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    };

    ScenarioFlags analyze_flags;
    auto* analyze = app.add_subcommand("analyze", "Metrics and top PINs for one scenario");
    add_scenario_options(analyze, analyze_flags);
    add_output(analyze);
    bool verbose = false;
    analyze->add_flag("-v,--verbose", verbose, "Report removed mass at every renormalization stage");

    ScenarioFlags sweep_flags;
    std::size_t sweep_max = 100;
    std::size_t sweep_step = 1;
    auto* sweep = app.add_subcommand("sweep", "Metrics across blacklist sizes 0..max");
    add_scenario_options(sweep, sweep_flags);
    add_output(sweep);
    sweep->add_option("--sweep-max", sweep_max, "Largest blacklist size (default 100)");
    sweep->add_option("--sweep-step", sweep_step, "Blacklist size increment (default 1)");

    ScenarioFlags table_flags;
    std::string subtlexus_path, opensub_path, subtlexnl_path;
    auto* tables = app.add_subcommand("tables", "Recompute the reference tables and compare with published values");
    tables->add_option("--subtlexus", subtlexus_path, "SUBTLEXus frequency list");
    tables->add_option("--opensub", opensub_path, "opensub frequency list");
    tables->add_option("--subtlexnl", subtlexnl_path, "SUBTLEXnl frequency list");
    add_format_options(tables, table_flags);
    add_output(tables);

    ScenarioFlags inspect_flags;
    auto* inspect = app.add_subcommand("inspect", "Corpus statistics and word-length histogram");
    inspect->add_option("--dict", inspect_flags.dicts, "Frequency list")->required();
    add_format_options(inspect, inspect_flags);
    add_output(inspect);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    ScenarioConfig config;
    try {
        if (*analyze)
            config = build_config(analyze, analyze_flags);
        else if (*sweep)
            config = build_config(sweep, sweep_flags);
        else if (*tables)
            config = build_config(tables, table_flags);
        else
            config = build_config(inspect, inspect_flags);
        if ((*analyze || *sweep) && config.dicts.empty())
            throw ConfigError("no dictionary given (use --dict PATH)");
        if (*sweep && sweep_step == 0)
            throw ConfigError("--sweep-step must be positive");
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    const OutputFormat format = parse_output_format(output);

    try {
        if (*analyze) {
            const auto result = run_scenario(config);
            if (verbose)
                print_stages(err, result);
            render_scenario(out, describe(config), result, format);
        } else if (*sweep) {
            const auto corpora = load_corpora(config);
            const auto series = sweep_blacklist(config, corpora, sweep_max, sweep_step);
            render_sweep(out, describe(config), series, format);
        } else if (*tables) {
            TableInputs inputs;
            inputs.min_count = config.min_count;
            inputs.subtlexus = load_optional(default_corpus(subtlexus_path, "subtlexus"), config.format);
            inputs.opensub = load_optional(default_corpus(opensub_path, "opensub"), config.format);
            inputs.subtlexnl = load_optional(default_corpus(subtlexnl_path, "subtlexnl"), config.format);
            const auto reports = reproduce_tables(inputs);
            std::size_t produced = 0;
            for (const auto& t : reports) {
                if (t.skipped_reason.empty())
                    ++produced;
                else if (format != OutputFormat::table)
                    err << "notice: " << t.id << " skipped: " << t.skipped_reason << '\n';
            }
            if (produced == 0) {
                err << "error: no table could be produced; supply at least --subtlexus or --opensub\n";
                return exit_failure;
            }
            render_tables(out, reports, format);
        } else {
            const auto list = load_frequency_list(resolve_corpus_path(config.dicts.front()), config.format);
            render_inspection(out, inspect_corpus(list, config.min_count), format);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    out.flush();
    return exit_ok;
}

}  // namespace dictpin::cli
