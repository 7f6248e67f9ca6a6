#include "airgen/data/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>

#include "airgen/errors.hpp"

namespace airgen::data {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

std::optional<int> parse_hour(const std::string& s) {
    int h = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), h);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) return std::nullopt;
    if (h < 0 || h > 23) return std::nullopt;
    return h;
}

std::optional<double> parse_value(const std::string& s) {
    double v = 0.0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

} // namespace

std::vector<HourlyRecord> ingest_csv(const std::string& path, IngestStats* stats) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input CSV: " + path);

    IngestStats local;
    IngestStats& st = stats ? *stats : local;
    st = IngestStats{};

    std::string line;
    if (!std::getline(in, line)) throw IngestError("empty file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "date,hour,value,station_id") {
        throw IngestError(path + ": expected header 'date,hour,value,station_id', got '" +
                          line + "'");
    }

    std::vector<HourlyRecord> records;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ++st.total_rows;

        auto fields = split_fields(line);
        if (fields.size() != 4) {
            st.rejected.push_back({row, "expected 4 fields, got " +
                                            std::to_string(fields.size())});
            continue;
        }

        HourlyRecord rec;
        try {
            rec.date = parse_date(fields[0]);
        } catch (const DataError&) {
            st.rejected.push_back({row, "malformed date '" + fields[0] + "'"});
            continue;
        }
        const auto hour = parse_hour(fields[1]);
        if (!hour) {
            st.rejected.push_back({row, "malformed hour '" + fields[1] + "'"});
            continue;
        }
        rec.hour = *hour;
        rec.station_id = fields[3];

        if (fields[2].empty()) {
            rec.missing = true;
            ++st.missing_values;
        } else {
            const auto value = parse_value(fields[2]);
            if (!value || *value < 0.0) {
                // Value-cell anomaly; the row itself is fine.
                rec.missing = true;
                ++st.missing_values;
                ++st.coerced_values;
            } else {
                rec.value = *value;
            }
        }
        records.push_back(std::move(rec));
    }

    if (st.total_rows > 0 &&
        10 * st.rejected.size() > st.total_rows) {
        std::string detail;
        for (std::size_t i = 0; i < std::min<std::size_t>(st.rejected.size(), 5); ++i) {
            detail += "\n  row " + std::to_string(st.rejected[i].row) + ": " +
                      st.rejected[i].reason;
        }
        throw IngestError(path + ": " + std::to_string(st.rejected.size()) + " of " +
                          std::to_string(st.total_rows) +
                          " rows malformed (>10%); first offenders:" + detail);
    }
    return records;
}

std::vector<DailySeries> build_daily_series(const std::vector<HourlyRecord>& records,
                                            BuildReport* report) {
    BuildReport local;
    BuildReport& rep = report ? *report : local;
    rep = BuildReport{};

    struct DaySlots {
        std::array<std::optional<double>, kHoursPerDay> values;
        std::array<bool, kHoursPerDay> seen{};
    };
    std::map<std::chrono::sys_days, DaySlots> days;
    std::vector<std::string> duplicates;
    for (const HourlyRecord& r : records) {
        auto& day = days[std::chrono::sys_days{r.date}];
        if (day.seen[r.hour]) {
            duplicates.push_back(format_date(r.date) + " hour " + std::to_string(r.hour));
            continue;
        }
        day.seen[r.hour] = true;
        if (!r.missing) day.values[r.hour] = r.value;
    }
    if (!duplicates.empty()) {
        std::string msg = "duplicate (date, hour) pairs:";
        for (std::size_t i = 0; i < std::min<std::size_t>(duplicates.size(), 10); ++i) {
            msg += " " + duplicates[i];
        }
        if (duplicates.size() > 10) {
            msg += " (+" + std::to_string(duplicates.size() - 10) + " more)";
        }
        throw DataError(msg);
    }

    std::vector<DailySeries> series;
    for (auto& [day, day_slots] : days) {
        const auto& slots = day_slots.values;
        const std::size_t present =
            static_cast<std::size_t>(std::count_if(slots.begin(), slots.end(),
                                                   [](const auto& s) { return s.has_value(); }));
        const std::chrono::year_month_day date{day};
        if (present < kHoursPerDay - 2) {
            rep.dropped.push_back({date, present});
            continue;
        }

        DailySeries s;
        s.date = date;
        s.label = classify(date);
        for (std::size_t h = 0; h < kHoursPerDay; ++h) {
            if (slots[h]) {
                s.values[h] = *slots[h];
                continue;
            }
            // Locate flanking present hours.
            std::ptrdiff_t left = static_cast<std::ptrdiff_t>(h) - 1;
            while (left >= 0 && !slots[left]) --left;
            std::size_t right = h + 1;
            while (right < kHoursPerDay && !slots[right]) ++right;

            if (left < 0) {
                s.values[h] = *slots[right];  // boundary gap: nearest value
            } else if (right >= kHoursPerDay) {
                s.values[h] = *slots[left];
            } else {
                const double a = *slots[left];
                const double b = *slots[right];
                const double t = static_cast<double>(h - left) /
                                 static_cast<double>(right - left);
                s.values[h] = a + (b - a) * t;
            }
            ++rep.interpolated_cells;
        }
        series.push_back(s);
    }
    return series;
}

} // namespace airgen::data
