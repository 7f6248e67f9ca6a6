#pragma once

#include <array>
#include <string>
#include <vector>

#include "airgen/eval/fake_dataset.hpp"

namespace airgen::eval {

struct OverallStats {
    double min = 0.0;
    double mean = 0.0;
    double stdev = 0.0;  // population
    double max = 0.0;
};

struct PerClassStats {
    double mean = 0.0;
    double stdev = 0.0;
    std::size_t count = 0;
};

/// Per-dataset RMSE summary: one row of the overall table plus the
/// per-class breakdown.
struct RmseReport {
    std::string dataset_name;
    OverallStats overall;
    std::array<PerClassStats, kNumClasses> per_class{};
    std::size_t sample_count = 0;
};

/// Scores every sample against its class representative and aggregates.
RmseReport evaluate(const FakeDataset& fake,
                    const std::array<data::ClassBandStats, kNumClasses>& reps);

/// Same metric over a real labeled dataset (the tables' "real" row).
RmseReport evaluate_real(const data::LabeledDataset& dataset,
                         const std::array<data::ClassBandStats, kNumClasses>& reps,
                         std::string name = "real");

/// Ascending overall mean; ties by ascending stdev, then dataset name.
std::vector<RmseReport> rank_datasets(std::vector<RmseReport> reports);

void save_report_json(const RmseReport& report, const std::string& path);

/// Combined overall table, one row per report (`dataset,min,mean,stdev,max`).
void save_overall_table_csv(const std::vector<RmseReport>& reports, const std::string& path);

/// Per-class table; `formatted` writes "mean+-stdev" strings, otherwise
/// separate numeric mean/stdev columns.
void save_per_class_table_csv(const std::vector<RmseReport>& reports, const std::string& path,
                              bool formatted);

} // namespace airgen::eval
