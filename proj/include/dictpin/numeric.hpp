#pragma once

#include <cmath>

namespace dictpin {

// Neumaier-compensated accumulator. Many corpora produce hundreds of thousands
// of tiny masses; plain summation drifts far enough to matter for the
// sum-to-one checks.
class CompensatedSum {
public:
    CompensatedSum& operator+=(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
        return *this;
    }

    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace dictpin
