#pragma once

#include "dictpin/corpus.hpp"
#include "dictpin/metrics.hpp"
#include "dictpin/strategy.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dictpin {

enum class Strategy { basic, prefix };

std::string_view to_string(Strategy s);

// Everything needed to evaluate one scenario. Defaults follow the usual
// reporting parameters (alpha 0.5, beta 6, frequency > 1, top 10).
struct ScenarioConfig {
    std::vector<std::filesystem::path> dicts;  // one corpus, or two when mixing
    ListFormat format;
    double min_count = 1;
    std::size_t pin_length = 4;
    std::string mapping = "standard";  // standard | stretched | path
    Strategy strategy = Strategy::basic;
    bool morph = false;
    BlacklistSpec blacklist;
    double mix_weight = 0.5;  // weight of the first corpus
    double alpha = 0.5;
    std::size_t beta = 6;
    std::size_t top = 10;
    std::uint64_t seed = 1;
    std::size_t mc_samples = 0;  // 0 disables the Monte Carlo cross-check

    // Throws ConfigError on any out-of-range field.
    void validate() const;
};

// Applies one "key=value" setting using the CLI flag names (without "--").
// Repeated "dict" keys append. Throws ConfigError on unknown keys or bad values.
void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value);

// Reads "key = value" lines; '#' and ';' start comments. Order is preserved.
std::vector<std::pair<std::string, std::string>> parse_settings(std::istream& in);
std::vector<std::pair<std::string, std::string>> load_settings_file(const std::filesystem::path& path);

// Relative paths that do not exist are retried under $DICTPIN_CORPUS_DIR.
std::filesystem::path resolve_corpus_path(const std::filesystem::path& path);

// Parses (unfiltered) every corpus the config names.
std::vector<WordFrequencyList> load_corpora(const ScenarioConfig& config);

// Renormalization bookkeeping for one pipeline stage.
struct StageReport {
    std::string stage;
    std::size_t support = 0;  // words or PINs left after the stage
    double removed_mass = 0;  // fraction of the stage input dropped before renormalizing
};

struct ScenarioResult {
    MetricsRecord metrics;
    std::vector<PinMass> top;
    std::vector<StageReport> stages;
    std::optional<MonteCarloEstimate> monte_carlo;
    PinDistribution distribution;
};

// parse -> filter -> strategy per corpus -> mix -> morph -> PIN blacklist -> metrics.
// Failures come back as StageError naming the stage.
ScenarioResult run_scenario(const ScenarioConfig& config);
ScenarioResult run_scenario(const ScenarioConfig& config, std::span<const WordFrequencyList> corpora);

struct SweepPoint {
    std::size_t k = 0;
    MetricsRecord metrics;
    double lambda_3 = 0;  // three-attempt success rate, reported next to the configured beta
};

struct SweepSeries {
    BlacklistMode mode = BlacklistMode::pin;
    std::vector<SweepPoint> points;  // strictly increasing k, starting at 0
};

// Evaluates the scenario for k = 0, step, 2*step, ... <= k_max, replacing the
// configured blacklist size. Points are computed concurrently and returned in
// k order. Throws ConfigError before any evaluation when k_max cannot fit.
SweepSeries sweep_blacklist(const ScenarioConfig& config, std::span<const WordFrequencyList> corpora,
                            std::size_t k_max, std::size_t step = 1);

// Short human label, e.g. "subtlexus n=4 standard prefix morph bl=pin:10".
std::string describe(const ScenarioConfig& config);

}  // namespace dictpin
