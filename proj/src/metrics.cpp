#include "dictpin/metrics.hpp"

#include "dictpin/error.hpp"
#include "dictpin/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace dictpin {

namespace {

void check_alpha(double alpha)
{
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("alpha must lie in (0, 1]");
}

void check_beta(std::size_t beta)
{
    if (beta < 1)
        throw DomainError("beta must be at least 1");
}

struct MarginalPoint {
    std::size_t guesses;
    double attained;
};

MarginalPoint marginal_point(const PinDistribution& dist, double alpha)
{
    check_alpha(alpha);
    CompensatedSum cum;
    const auto sorted = dist.sorted();
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cum += sorted[i].probability;
        if (cum.value() >= alpha)
            return {i + 1, cum.value()};
    }
    // alpha == 1 with a total that rounded just below 1
    return {sorted.size(), cum.value()};
}

std::uint64_t pin_space(std::size_t n)
{
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i)
        space *= 10;
    return space;
}

}  // namespace

double entropy(const PinDistribution& dist)
{
    CompensatedSum h;
    for (const auto& e : dist.sorted())
        h += -e.probability * std::log2(e.probability);
    return h.value();
}

double guesswork(const PinDistribution& dist)
{
    CompensatedSum g;
    const auto sorted = dist.sorted();
    for (std::size_t i = 0; i < sorted.size(); ++i)
        g += static_cast<double>(i + 1) * sorted[i].probability;
    return g.value();
}

double guesswork_bits(double g)
{
    if (!(g >= 1.0))
        throw DomainError("guesswork below 1 has no bit equivalent");
    return std::log2(2.0 * g - 1.0);
}

std::size_t marginal_guesswork(const PinDistribution& dist, double alpha)
{
    return marginal_point(dist, alpha).guesses;
}

double marginal_guesswork_bits(const PinDistribution& dist, double alpha)
{
    const auto [mu, attained] = marginal_point(dist, alpha);
    return std::log2(static_cast<double>(mu) / attained);
}

double marginal_success_rate(const PinDistribution& dist, std::size_t beta)
{
    check_beta(beta);
    const auto sorted = dist.sorted();
    if (beta >= sorted.size())
        return 1.0;
    CompensatedSum cum;
    for (std::size_t i = 0; i < beta; ++i)
        cum += sorted[i].probability;
    return std::min(cum.value(), 1.0);
}

MetricsRecord full_metrics(const PinDistribution& dist, double alpha, std::size_t beta)
{
    check_alpha(alpha);
    check_beta(beta);
    MetricsRecord r;
    r.alpha = alpha;
    r.beta = beta;
    r.support_size = dist.support_size();
    r.pin_space = pin_space(dist.pin_length());
    r.entropy_bits = entropy(dist);
    r.guesswork = guesswork(dist);
    r.guesswork_bits = guesswork_bits(r.guesswork);
    const auto [mu, attained] = marginal_point(dist, alpha);
    r.marginal_guesswork = mu;
    r.marginal_guesswork_bits = std::log2(static_cast<double>(mu) / attained);
    r.marginal_success = marginal_success_rate(dist, beta);
    return r;
}

MonteCarloEstimate monte_carlo_check(const PinDistribution& dist, std::size_t samples, std::uint64_t seed,
                                     std::size_t beta)
{
    check_beta(beta);
    if (samples < 1)
        throw DomainError("Monte Carlo needs at least one sample");

    const auto sorted = dist.sorted();
    std::vector<double> cdf(sorted.size());
    CompensatedSum cum;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cum += sorted[i].probability;
        cdf[i] = cum.value();
    }
    const double total = cdf.back();

    std::mt19937_64 gen(seed);
    std::size_t hits = 0;
    CompensatedSum rank_sum;
    for (std::size_t s = 0; s < samples; ++s) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * total;
        auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        idx = std::min(idx, cdf.size() - 1);
        if (idx < beta)
            ++hits;
        rank_sum += static_cast<double>(idx + 1);
    }

    MonteCarloEstimate est;
    est.samples = samples;
    est.beta = beta;
    est.hit_rate = static_cast<double>(hits) / static_cast<double>(samples);
    est.mean_rank = rank_sum.value() / static_cast<double>(samples);
    return est;
}

}  // namespace dictpin
