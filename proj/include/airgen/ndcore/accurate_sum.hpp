#pragma once

namespace airgen::ndcore {

/// Kahan-compensated accumulator. Column statistics feed tolerance-1e-12
/// oracle comparisons, which plain summation over a few thousand terms
/// cannot hold.
class KahanSum {
public:
    void add(double x) {
        const double y = x - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }

    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

} // namespace airgen::ndcore
