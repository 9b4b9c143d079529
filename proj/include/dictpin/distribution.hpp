#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dictpin {

struct PinMass {
    std::string pin;
    double probability = 0;

    bool operator==(const PinMass&) const = default;
};

// Exact probability mass function over n-digit strings.
//
// Only strictly positive masses are stored. sorted() is the canonical guessing
// order: descending probability, ties broken by ascending PIN. Every metric
// reads ranks from this view.
class PinDistribution {
public:
    // Masses must already sum to 1 (within 1e-9). Zero entries are dropped.
    // Throws DomainError on malformed PINs, negative masses or a bad total,
    // EmptySupportError when nothing positive remains.
    static PinDistribution from_probabilities(std::size_t pin_length,
                                              const std::unordered_map<std::string, double>& masses);

    // Divides arbitrary non-negative weights by their compensated total.
    static PinDistribution from_weights(std::size_t pin_length,
                                        const std::unordered_map<std::string, double>& weights);

    std::size_t pin_length() const noexcept { return pin_length_; }
    std::size_t support_size() const noexcept { return sorted_.size(); }
    std::span<const PinMass> sorted() const noexcept { return sorted_; }

    // 0 for PINs outside the support.
    double mass(std::string_view pin) const;
    // Compensated sum of all masses.
    double total_mass() const;

    bool operator==(const PinDistribution& o) const
    {
        return pin_length_ == o.pin_length_ && sorted_ == o.sorted_;
    }

private:
    PinDistribution(std::size_t pin_length, std::vector<PinMass> sorted);

    std::size_t pin_length_ = 0;
    std::vector<PinMass> sorted_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Canonical ordering predicate used for sorted() and for all "most frequent" picks.
inline bool guess_order(const PinMass& a, const PinMass& b) noexcept
{
    if (a.probability != b.probability)
        return a.probability > b.probability;
    return a.pin < b.pin;
}

}  // namespace dictpin
