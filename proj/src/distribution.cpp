#include "dictpin/distribution.hpp"

#include "dictpin/error.hpp"
#include "dictpin/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace dictpin {

namespace {

constexpr double sum_tolerance = 1e-9;

void check_pin(std::string_view pin, std::size_t pin_length)
{
    if (pin.size() != pin_length)
        throw DomainError("PIN '" + std::string(pin) + "' does not have length " + std::to_string(pin_length));
    for (char c : pin)
        if (c < '0' || c > '9')
            throw DomainError("PIN '" + std::string(pin) + "' contains a non-digit");
}

std::vector<PinMass> collect(std::size_t pin_length, const std::unordered_map<std::string, double>& masses,
                             double scale)
{
    if (pin_length == 0)
        throw DomainError("PIN length must be positive");
    std::vector<PinMass> out;
    out.reserve(masses.size());
    for (const auto& [pin, m] : masses) {
        check_pin(pin, pin_length);
        if (!std::isfinite(m) || m < 0)
            throw DomainError("mass of '" + pin + "' is negative or not finite");
        if (m > 0)
            out.push_back({pin, m * scale});
    }
    if (out.empty())
        throw EmptySupportError("distribution has no positive mass");
    std::sort(out.begin(), out.end(), guess_order);
    return out;
}

}  // namespace

PinDistribution::PinDistribution(std::size_t pin_length, std::vector<PinMass> sorted)
    : pin_length_(pin_length), sorted_(std::move(sorted))
{
    index_.reserve(sorted_.size());
    for (std::size_t i = 0; i < sorted_.size(); ++i)
        index_.emplace(sorted_[i].pin, i);
}

PinDistribution PinDistribution::from_probabilities(std::size_t pin_length,
                                                    const std::unordered_map<std::string, double>& masses)
{
    PinDistribution d(pin_length, collect(pin_length, masses, 1.0));
    const double total = d.total_mass();
    if (std::fabs(total - 1.0) > sum_tolerance)
        throw DomainError("probabilities sum to " + std::to_string(total) + ", not 1");
    return d;
}

PinDistribution PinDistribution::from_weights(std::size_t pin_length,
                                              const std::unordered_map<std::string, double>& weights)
{
    CompensatedSum total;
    for (const auto& [pin, w] : weights)
        total += w;
    if (!(total.value() > 0) || !std::isfinite(total.value()))
        throw EmptySupportError("distribution has no positive mass");
    return PinDistribution(pin_length, collect(pin_length, weights, 1.0 / total.value()));
}

double PinDistribution::mass(std::string_view pin) const
{
    const auto it = index_.find(std::string(pin));
    return it == index_.end() ? 0.0 : sorted_[it->second].probability;
}

double PinDistribution::total_mass() const
{
    CompensatedSum sum;
    for (const auto& e : sorted_)
        sum += e.probability;
    return sum.value();
}

}  // namespace dictpin
