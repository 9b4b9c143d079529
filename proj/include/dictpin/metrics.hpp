#pragma once

#include "dictpin/distribution.hpp"

#include <cstddef>
#include <cstdint>

namespace dictpin {

struct MetricsRecord {
    double entropy_bits = 0;             // Shannon entropy H1
    double guesswork = 0;                // expected guesses G
    double guesswork_bits = 0;           // log2(2G - 1)
    std::size_t marginal_guesswork = 0;  // guesses needed to reach alpha
    double marginal_guesswork_bits = 0;  // log2(mu / mass attained at mu)
    double marginal_success = 0;         // mass of the top beta guesses
    double alpha = 0.5;
    std::size_t beta = 6;
    std::size_t support_size = 0;
    std::uint64_t pin_space = 0;  // 10^n

    bool operator==(const MetricsRecord&) const = default;
};

double entropy(const PinDistribution& dist);
double guesswork(const PinDistribution& dist);

// Throws DomainError for g < 1.
double guesswork_bits(double g);

// Smallest k whose top-k cumulative mass reaches alpha. alpha in (0, 1].
std::size_t marginal_guesswork(const PinDistribution& dist, double alpha);

// log2(mu_alpha / lambda_{mu_alpha}), where the denominator is the cumulative
// mass actually attained after mu_alpha guesses.
double marginal_guesswork_bits(const PinDistribution& dist, double alpha);

// Cumulative mass of the top beta PINs; 1 once beta covers the support.
double marginal_success_rate(const PinDistribution& dist, std::size_t beta);

MetricsRecord full_metrics(const PinDistribution& dist, double alpha = 0.5, std::size_t beta = 6);

struct MonteCarloEstimate {
    std::size_t samples = 0;
    std::size_t beta = 0;
    double hit_rate = 0;   // fraction of draws ranked within the top beta
    double mean_rank = 0;  // estimates the guesswork
};

// Draws i.i.d. PINs by inverse-CDF sampling over sorted(). The generator is
// mt19937_64 with a hand-rolled [0,1) conversion, so results are identical
// across standard libraries for a given seed.
MonteCarloEstimate monte_carlo_check(const PinDistribution& dist, std::size_t samples,
                                     std::uint64_t seed, std::size_t beta = 6);

}  // namespace dictpin
