#pragma once

#include <cmath>
#include <span>
#include <string>

#include "airgen/data/daily_series.hpp"
#include "airgen/errors.hpp"

namespace airgen::eval {

/// Root mean squared error between a class representative and one series:
/// sqrt((1/24) sum_t (rep(t) - sample(t))^2).
inline double rmse(std::span<const double> rep, std::span<const double> sample) {
    if (rep.size() != data::kHoursPerDay || sample.size() != data::kHoursPerDay) {
        throw ShapeError("rmse: expected two length-24 series, got " +
                         std::to_string(rep.size()) + " and " +
                         std::to_string(sample.size()));
    }
    double sum = 0.0;
    for (std::size_t t = 0; t < data::kHoursPerDay; ++t) {
        const double d = rep[t] - sample[t];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(data::kHoursPerDay));
}

} // namespace airgen::eval
