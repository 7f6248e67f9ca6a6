#pragma once

#include <string>
#include <vector>

#include "airgen/data/daily_series.hpp"

namespace airgen::data {

struct RejectedRow {
    std::size_t row;  // 1-based, counting the header as row 1
    std::string reason;
};

struct IngestStats {
    std::size_t total_rows = 0;    // data rows seen (header excluded)
    std::size_t missing_values = 0;
    std::size_t coerced_values = 0;  // unparseable or negative value cells -> MISSING
    std::vector<RejectedRow> rejected;
};

/// Reads the normalized CSV (header `date,hour,value,station_id`; ISO dates;
/// empty value cell = missing). Value-cell anomalies become MISSING; rows
/// with malformed date/hour are rejected and reported. More than 10%
/// rejected rows aborts with an IngestError.
std::vector<HourlyRecord> ingest_csv(const std::string& path, IngestStats* stats = nullptr);

struct DroppedDay {
    std::chrono::year_month_day date;
    std::size_t present_hours = 0;
};

struct BuildReport {
    std::vector<DroppedDay> dropped;
    std::size_t interpolated_cells = 0;
};

/// Groups records into daily series. Days with at least 22 present hours are
/// kept: interior gaps are filled by linear interpolation, boundary gaps by
/// nearest-value extension. Days with more than 2 missing hours are dropped
/// and reported. Labels come from classify(date).
std::vector<DailySeries> build_daily_series(const std::vector<HourlyRecord>& records,
                                            BuildReport* report = nullptr);

} // namespace airgen::data
