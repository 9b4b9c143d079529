#include "dictpin/strategy.hpp"

#include "dictpin/error.hpp"
#include "dictpin/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace dictpin {

namespace {

// Per-PIN compensated accumulation of word counts.
class MassAccumulator {
public:
    void add(const std::string& pin, double weight) { sums_[pin] += weight; }

    PinDistribution finish(std::size_t pin_length) const
    {
        std::unordered_map<std::string, double> weights;
        weights.reserve(sums_.size());
        for (const auto& [pin, s] : sums_)
            weights.emplace(pin, s.value());
        return PinDistribution::from_weights(pin_length, weights);
    }

    bool empty() const noexcept { return sums_.empty(); }

private:
    std::unordered_map<std::string, CompensatedSum> sums_;
};

PinDistribution from_words(const WordFrequencyList& list, std::size_t pin_length, const KeypadMapping& mapping,
                           LengthPredicate pred, const char* what)
{
    if (pin_length == 0)
        throw DomainError("PIN length must be positive");
    MassAccumulator acc;
    for (const auto& e : list.entries())
        if (pred(e.word.size()))
            acc.add(map_word(std::string_view(e.word).substr(0, pin_length), mapping), e.count);
    if (acc.empty())
        throw EmptySupportError(std::string("empty strategy support: no words ") + what);
    return acc.finish(pin_length);
}

}  // namespace

std::string_view to_string(BlacklistMode mode)
{
    return mode == BlacklistMode::pin ? "pin" : "word";
}

PinDistribution basic_distribution(const WordFrequencyList& list, std::size_t pin_length,
                                   const KeypadMapping& mapping)
{
    return from_words(list, pin_length, mapping, LengthPredicate::exactly(pin_length),
                      ("of length " + std::to_string(pin_length)).c_str());
}

PinDistribution prefix_distribution(const WordFrequencyList& list, std::size_t pin_length,
                                    const KeypadMapping& mapping)
{
    return from_words(list, pin_length, mapping, LengthPredicate::at_least(pin_length),
                      ("of length >= " + std::to_string(pin_length)).c_str());
}

PinDistribution morph_distribution(const PinDistribution& base)
{
    const std::size_t n = base.pin_length();
    std::unordered_map<std::string, CompensatedSum> sums;
    sums.reserve(base.support_size() * (9 * n + 1));
    std::string pin;
    for (const auto& [orig, q] : base.sorted()) {
        const double share = q / static_cast<double>(10 * n);
        pin = orig;
        for (std::size_t pos = 0; pos < n; ++pos) {
            const char keep = pin[pos];
            for (char d = '0'; d <= '9'; ++d) {
                pin[pos] = d;
                sums[pin] += share;
            }
            pin[pos] = keep;
        }
    }
    std::unordered_map<std::string, double> masses;
    masses.reserve(sums.size());
    for (const auto& [p, s] : sums)
        masses.emplace(p, s.value());
    return PinDistribution::from_probabilities(n, masses);
}

PinDistribution blacklist_pins(const PinDistribution& dist, std::size_t k)
{
    if (k == 0)
        return dist;
    const auto sorted = dist.sorted();
    if (k >= sorted.size())
        throw EmptySupportError("blacklist exhausts support: k=" + std::to_string(k) + " but only " +
                                std::to_string(sorted.size()) + " PINs");
    std::unordered_map<std::string, double> rest;
    rest.reserve(sorted.size() - k);
    for (std::size_t i = k; i < sorted.size(); ++i)
        rest.emplace(sorted[i].pin, sorted[i].probability);
    return PinDistribution::from_weights(dist.pin_length(), rest);
}

WordFrequencyList blacklist_words(const WordFrequencyList& list, std::size_t k, LengthPredicate length_pred)
{
    if (k == 0)
        return list;
    std::vector<const WordEntry*> eligible;
    for (const auto& e : list.entries())
        if (length_pred(e.word.size()))
            eligible.push_back(&e);
    if (k >= eligible.size())
        throw EmptySupportError("blacklist exhausts support: k=" + std::to_string(k) + " but only " +
                                std::to_string(eligible.size()) + " eligible words");
    std::partial_sort(eligible.begin(), eligible.begin() + static_cast<std::ptrdiff_t>(k), eligible.end(),
                      [](const WordEntry* a, const WordEntry* b) {
                          if (a->count != b->count)
                              return a->count > b->count;
                          return a->word < b->word;
                      });
    std::unordered_map<std::string_view, bool> banned;
    for (std::size_t i = 0; i < k; ++i)
        banned.emplace(eligible[i]->word, true);

    std::vector<WordEntry> kept;
    kept.reserve(list.size() - k);
    for (const auto& e : list.entries())
        if (!banned.contains(e.word))
            kept.push_back(e);
    WordFrequencyList out(std::move(kept), list.source_label());
    out.set_stats(list.stats());
    return out;
}

PinDistribution mix(const PinDistribution& a, const PinDistribution& b, double weight)
{
    if (a.pin_length() != b.pin_length())
        throw DomainError("cannot mix distributions over PIN lengths " + std::to_string(a.pin_length()) + " and " +
                          std::to_string(b.pin_length()));
    if (!(weight >= 0.0 && weight <= 1.0))
        throw DomainError("mixture weight must lie in [0, 1]");
    std::unordered_map<std::string, double> masses;
    masses.reserve(a.support_size() + b.support_size());
    if (weight > 0)
        for (const auto& e : a.sorted())
            masses[e.pin] += weight * e.probability;
    if (weight < 1)
        for (const auto& e : b.sorted())
            masses[e.pin] += (1.0 - weight) * e.probability;
    return PinDistribution::from_probabilities(a.pin_length(), masses);
}

}  // namespace dictpin
