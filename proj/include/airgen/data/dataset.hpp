#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "airgen/data/daily_series.hpp"

namespace airgen::data {

/// Labeled collection of daily series, plus balancing bookkeeping.
struct LabeledDataset {
    std::vector<DailySeries> samples;
    bool balanced = false;
    std::optional<std::uint64_t> balance_seed;

    std::array<std::size_t, kNumClasses> per_class_counts() const;
    std::size_t size() const { return samples.size(); }
};

/// Per-hour summary of one class: mean (the class representative rep_c),
/// population standard deviation, minimum and maximum.
struct ClassBandStats {
    ClassLabel label;
    std::array<double, kHoursPerDay> mean{};
    std::array<double, kHoursPerDay> stdev{};
    std::array<double, kHoursPerDay> min{};
    std::array<double, kHoursPerDay> max{};
};

/// Uniform subsampling without replacement down to the smallest class count.
/// Deterministic for a given seed; a dataset whose counts are already equal
/// passes through with only its order normalized.
LabeledDataset balance(const LabeledDataset& dataset, std::uint64_t seed);

/// Per-hour statistics of one class; requires at least two samples.
ClassBandStats band_stats(const LabeledDataset& dataset, ClassLabel label);

/// band_stats for all eight classes.
std::array<ClassBandStats, kNumClasses> class_band_stats(const LabeledDataset& dataset);

// JSON (de)serialization of the normalized labeled-dataset file.
void save_dataset(const LabeledDataset& dataset, const std::string& path);
LabeledDataset load_dataset(const std::string& path);

} // namespace airgen::data
