#pragma once

#include "dictpin/corpus.hpp"
#include "dictpin/distribution.hpp"
#include "dictpin/mapping.hpp"

#include <cstddef>
#include <string_view>

namespace dictpin {

enum class BlacklistMode { pin, word };

struct BlacklistSpec {
    BlacklistMode mode = BlacklistMode::pin;
    std::size_t k = 0;
};

std::string_view to_string(BlacklistMode mode);

// Words of length exactly n, each contributing its count to the mapped PIN.
PinDistribution basic_distribution(const WordFrequencyList& list, std::size_t pin_length,
                                   const KeypadMapping& mapping);

// Words of length >= n, each contributing its full count to the PIN of its first n letters.
PinDistribution prefix_distribution(const WordFrequencyList& list, std::size_t pin_length,
                                    const KeypadMapping& mapping);

// One uniformly chosen position is overwritten with one uniformly chosen
// digit (0-9, including the digit already there). Each base PIN spreads its
// mass over 10n outcomes.
PinDistribution morph_distribution(const PinDistribution& base);

// Drops the k most probable PINs and renormalizes the rest.
// Throws EmptySupportError when k >= support size.
PinDistribution blacklist_pins(const PinDistribution& dist, std::size_t k);

// Drops the k highest-count words among those satisfying the predicate
// (ties by ascending word). Other entries are untouched.
// Throws EmptySupportError when k exhausts the eligible words.
WordFrequencyList blacklist_words(const WordFrequencyList& list, std::size_t k,
                                  LengthPredicate length_pred);

// weight * a + (1 - weight) * b over the union of supports.
PinDistribution mix(const PinDistribution& a, const PinDistribution& b, double weight);

}  // namespace dictpin
