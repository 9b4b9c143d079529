#include "dictpin/scenario.hpp"

#include "dictpin/error.hpp"
#include "dictpin/mapping.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <istream>
#include <thread>

namespace dictpin {

namespace {

std::string_view trim(std::string_view s)
{
    constexpr std::string_view ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected)
{
    throw ConfigError("invalid value for --" + std::string(key) + ": '" + std::string(value) + "' (expected " +
                      std::string(expected) + ")");
}

template <class T>
T parse_number(std::string_view key, std::string_view value, std::string_view expected)
{
    const auto text = trim(value);
    T out{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        bad_value(key, value, expected);
    return out;
}

bool parse_bool(std::string_view key, std::string_view value)
{
    const auto v = trim(value);
    if (v.empty() || v == "true" || v == "1" || v == "yes" || v == "on")
        return true;
    if (v == "false" || v == "0" || v == "no" || v == "off")
        return false;
    bad_value(key, value, "true or false");
}

char parse_separator(std::string_view key, std::string_view value)
{
    const auto v = trim(value);
    if (v == "tsv" || v == "tab" || v == "\\t")
        return '\t';
    if (v == "csv" || v == "comma")
        return ',';
    if (v == "space" || v == "ws")
        return ' ';
    if (v == "semicolon")
        return ';';
    if (v == "pipe")
        return '|';
    if (value.size() == 1)
        return value[0];
    bad_value(key, value, "tsv, csv, space, semicolon, pipe or a single character");
}

LengthPredicate strategy_predicate(const ScenarioConfig& config)
{
    return config.strategy == Strategy::prefix ? LengthPredicate::at_least(config.pin_length)
                                               : LengthPredicate::exactly(config.pin_length);
}

template <class F>
auto in_stage(const std::string& stage, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(stage, e.what());
    }
}

std::string corpus_tag(const WordFrequencyList& list, std::size_t i)
{
    return list.source_label().empty() ? "corpus" + std::to_string(i + 1) : list.source_label();
}

// Everything up to (not including) the PIN blacklist.
PinDistribution build_distribution(const ScenarioConfig& config, std::span<const WordFrequencyList> corpora,
                                   std::vector<StageReport>* stages)
{
    if (corpora.empty() || corpora.size() > 2)
        throw ConfigError("a scenario needs one corpus, or two when mixing");
    const auto mapping = in_stage("mapping", [&] { return resolve_mapping(config.mapping); });
    const auto pred = strategy_predicate(config);
    const auto report = [&](std::string stage, std::size_t support, double removed) {
        if (stages)
            stages->push_back({std::move(stage), support, removed});
    };

    std::vector<PinDistribution> parts;
    for (std::size_t i = 0; i < corpora.size(); ++i) {
        const auto& corpus = corpora[i];
        const auto tag = corpus_tag(corpus, i);

        auto words = in_stage("filter[" + tag + "]", [&] { return filter_list(corpus, config.min_count, pred); });
        report("filter[" + tag + "]", words.size(), 1.0 - words.total() / corpus.total());

        if (config.blacklist.mode == BlacklistMode::word && config.blacklist.k > 0) {
            const auto stage = "word-blacklist[" + tag + "]";
            auto kept = in_stage(stage, [&] { return blacklist_words(words, config.blacklist.k, pred); });
            report(stage, kept.size(), 1.0 - kept.total() / words.total());
            words = std::move(kept);
        }

        const auto stage = std::string(to_string(config.strategy)) + "[" + tag + "]";
        parts.push_back(in_stage(stage, [&] {
            return config.strategy == Strategy::prefix ? prefix_distribution(words, config.pin_length, mapping)
                                                       : basic_distribution(words, config.pin_length, mapping);
        }));
        report(stage, parts.back().support_size(), 0.0);
    }

    PinDistribution dist = parts.front();
    if (parts.size() == 2) {
        dist = in_stage("mix", [&] { return mix(parts[0], parts[1], config.mix_weight); });
        report("mix", dist.support_size(), 0.0);
    }
    if (config.morph) {
        dist = in_stage("morph", [&] { return morph_distribution(dist); });
        report("morph", dist.support_size(), 0.0);
    }
    return dist;
}

}  // namespace

std::string_view to_string(Strategy s)
{
    return s == Strategy::prefix ? "prefix" : "basic";
}

void ScenarioConfig::validate() const
{
    format.validate();
    if (dicts.size() > 2)
        throw ConfigError("at most two dictionaries can be mixed");
    if (pin_length < 1 || pin_length > 9)
        throw ConfigError("PIN length must be between 1 and 9");
    if (!(min_count >= 0))
        throw ConfigError("min-count must be >= 0");
    if (!(mix_weight >= 0 && mix_weight <= 1))
        throw ConfigError("mix-weight must lie in [0, 1]");
    if (!(alpha > 0 && alpha <= 1))
        throw ConfigError("alpha must lie in (0, 1]");
    if (beta < 1)
        throw ConfigError("beta must be at least 1");
    if (mapping.empty())
        throw ConfigError("mapping must be 'standard', 'stretched' or a file path");
}

void apply_setting(ScenarioConfig& c, std::string_view raw_key, std::string_view value)
{
    const auto key = trim(raw_key);
    if (key == "dict") {
        if (trim(value).empty())
            bad_value(key, value, "a path");
        c.dicts.emplace_back(std::string(trim(value)));
    } else if (key == "dict-format") {
        c.format.separator = parse_separator(key, value);
    } else if (key == "word-col") {
        c.format.word_column = parse_number<std::size_t>(key, value, "a column index");
    } else if (key == "count-col") {
        c.format.count_column = parse_number<std::size_t>(key, value, "a column index");
    } else if (key == "header") {
        c.format.has_header = parse_bool(key, value);
    } else if (key == "strict") {
        c.format.strict = parse_bool(key, value);
    } else if (key == "min-count") {
        c.min_count = parse_number<double>(key, value, "a non-negative number");
    } else if (key == "pin-length") {
        c.pin_length = parse_number<std::size_t>(key, value, "an integer in 1..9");
    } else if (key == "mapping") {
        c.mapping = std::string(trim(value));
    } else if (key == "strategy") {
        const auto v = trim(value);
        if (v == "basic")
            c.strategy = Strategy::basic;
        else if (v == "prefix")
            c.strategy = Strategy::prefix;
        else
            bad_value(key, value, "basic or prefix");
    } else if (key == "morph") {
        c.morph = parse_bool(key, value);
    } else if (key == "blacklist") {
        c.blacklist.k = parse_number<std::size_t>(key, value, "a non-negative integer");
    } else if (key == "blacklist-mode") {
        const auto v = trim(value);
        if (v == "pin")
            c.blacklist.mode = BlacklistMode::pin;
        else if (v == "word")
            c.blacklist.mode = BlacklistMode::word;
        else
            bad_value(key, value, "pin or word");
    } else if (key == "mix-weight") {
        c.mix_weight = parse_number<double>(key, value, "a probability");
    } else if (key == "alpha") {
        c.alpha = parse_number<double>(key, value, "a probability");
    } else if (key == "beta") {
        c.beta = parse_number<std::size_t>(key, value, "a positive integer");
    } else if (key == "top") {
        c.top = parse_number<std::size_t>(key, value, "a non-negative integer");
    } else if (key == "seed") {
        c.seed = parse_number<std::uint64_t>(key, value, "an unsigned integer");
    } else if (key == "mc-samples") {
        c.mc_samples = parse_number<std::size_t>(key, value, "a non-negative integer");
    } else {
        throw ConfigError("unknown setting '" + std::string(key) + "'");
    }
}

std::vector<std::pair<std::string, std::string>> parse_settings(std::istream& in)
{
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto cut = line.find_first_of("#;");
        std::string_view view = trim(std::string_view(line).substr(0, cut));
        if (view.empty() || view.front() == '[')
            continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        auto key = trim(view.substr(0, eq));
        if (key.starts_with("--"))
            key.remove_prefix(2);
        auto value = trim(view.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        out.emplace_back(std::string(key), std::string(value));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> load_settings_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path.string());
    return parse_settings(in);
}

std::filesystem::path resolve_corpus_path(const std::filesystem::path& path)
{
    std::error_code ec;
    if (std::filesystem::exists(path, ec) || path.is_absolute())
        return path;
    if (const char* dir = std::getenv("DICTPIN_CORPUS_DIR"); dir && *dir) {
        auto candidate = std::filesystem::path(dir) / path;
        if (std::filesystem::exists(candidate, ec))
            return candidate;
    }
    return path;
}

std::vector<WordFrequencyList> load_corpora(const ScenarioConfig& config)
{
    if (config.dicts.empty())
        throw ConfigError("no dictionary given (use --dict)");
    std::vector<WordFrequencyList> out;
    for (const auto& p : config.dicts)
        out.push_back(in_stage("load", [&] { return load_frequency_list(resolve_corpus_path(p), config.format); }));
    return out;
}

ScenarioResult run_scenario(const ScenarioConfig& config)
{
    config.validate();
    const auto corpora = load_corpora(config);
    return run_scenario(config, corpora);
}

ScenarioResult run_scenario(const ScenarioConfig& config, std::span<const WordFrequencyList> corpora)
{
    config.validate();
    std::vector<StageReport> stages;
    PinDistribution dist = build_distribution(config, corpora, &stages);

    if (config.blacklist.mode == BlacklistMode::pin && config.blacklist.k > 0) {
        const auto removed = marginal_success_rate(dist, config.blacklist.k);
        dist = in_stage("pin-blacklist", [&] { return blacklist_pins(dist, config.blacklist.k); });
        stages.push_back({"pin-blacklist", dist.support_size(), removed});
    }

    auto metrics = in_stage("metrics", [&] { return full_metrics(dist, config.alpha, config.beta); });
    const auto sorted = dist.sorted();
    std::vector<PinMass> top(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(
                                                                  std::min(config.top, sorted.size())));
    std::optional<MonteCarloEstimate> mc;
    if (config.mc_samples > 0)
        mc = monte_carlo_check(dist, config.mc_samples, config.seed, config.beta);

    return ScenarioResult{metrics, std::move(top), std::move(stages), mc, std::move(dist)};
}

SweepSeries sweep_blacklist(const ScenarioConfig& config, std::span<const WordFrequencyList> corpora,
                            std::size_t k_max, std::size_t step)
{
    config.validate();
    if (step == 0)
        throw ConfigError("sweep step must be positive");

    SweepSeries series;
    series.mode = config.blacklist.mode;
    std::vector<std::size_t> ks;
    for (std::size_t k = 0; k <= k_max; k += step)
        ks.push_back(k);
    series.points.resize(ks.size());

    ScenarioConfig unswept = config;
    unswept.blacklist.k = 0;
    std::optional<PinDistribution> base;
    if (series.mode == BlacklistMode::pin) {
        base = build_distribution(unswept, corpora, nullptr);
        if (k_max >= base->support_size())
            throw ConfigError("sweep maximum " + std::to_string(k_max) + " exhausts the " +
                              std::to_string(base->support_size()) + "-PIN support");
    } else {
        const auto pred = strategy_predicate(config);
        for (std::size_t i = 0; i < corpora.size(); ++i) {
            const auto words = in_stage("filter[" + corpus_tag(corpora[i], i) + "]",
                                        [&] { return filter_list(corpora[i], config.min_count, pred); });
            if (k_max >= words.size())
                throw ConfigError("sweep maximum " + std::to_string(k_max) + " exhausts the " +
                                  std::to_string(words.size()) + " eligible words of " + corpus_tag(corpora[i], i));
        }
    }

    const auto evaluate = [&](std::size_t k) {
        std::optional<PinDistribution> dist;
        if (base) {
            dist = blacklist_pins(*base, k);
        } else {
            ScenarioConfig point = config;
            point.blacklist.k = k;
            dist = build_distribution(point, corpora, nullptr);
        }
        return SweepPoint{k, full_metrics(*dist, config.alpha, config.beta), marginal_success_rate(*dist, 3)};
    };

    std::vector<std::exception_ptr> errors(ks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < ks.size(); i = next++) {
            try {
                series.points[i] = evaluate(ks[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads =
        std::min<std::size_t>(ks.size(), std::max(1u, std::thread::hardware_concurrency()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return series;
}

std::string describe(const ScenarioConfig& config)
{
    std::string label;
    for (const auto& d : config.dicts) {
        if (!label.empty())
            label += '+';
        label += d.stem().string();
    }
    if (label.empty())
        label = "corpus";
    label += " n=" + std::to_string(config.pin_length) + " ";
    label += (config.mapping == "standard" || config.mapping == "stretched")
                 ? config.mapping
                 : std::filesystem::path(config.mapping).stem().string();
    label += " ";
    label += to_string(config.strategy);
    if (config.morph)
        label += " morph";
    if (config.blacklist.k > 0)
        label += " bl=" + std::string(to_string(config.blacklist.mode)) + ":" + std::to_string(config.blacklist.k);
    if (config.dicts.size() == 2 && config.mix_weight != 0.5) {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, config.mix_weight);
        label += " w=" + std::string(buf, res.ptr);
    }
    return label;
}

}  // namespace dictpin
