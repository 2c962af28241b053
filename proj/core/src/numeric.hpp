#pragma once

#include <cmath>

namespace paracon::detail {

// Neumaier-compensated sum in extended precision. Keeps weighted means of
// exact per-bucket ratios correctly rounded in the common cases.
class Accumulator {
public:
    void add(long double x) noexcept
    {
        const long double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    long double value() const noexcept { return sum_ + comp_; }

private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

} // namespace paracon::detail
