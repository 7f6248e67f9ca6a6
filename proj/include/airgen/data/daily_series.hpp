#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <string>

namespace airgen::data {

inline constexpr int kNumClasses = 8;
inline constexpr std::size_t kHoursPerDay = 24;

enum class Season { Winter = 0, Spring = 1, Summer = 2, Autumn = 3 };
enum class DayType { Weekend = 0, Working = 1 };

/// One of the eight season x day-type classes:
///   winter/weekend=0, winter/working=1, spring/weekend=2, spring/working=3,
///   summer/weekend=4, summer/working=5, autumn/weekend=6, autumn/working=7.
struct ClassLabel {
    int id = 0;

    ClassLabel() = default;
    explicit ClassLabel(int id);
    ClassLabel(Season season, DayType day_type);

    Season season() const { return static_cast<Season>(id / 2); }
    DayType day_type() const { return static_cast<DayType>(id % 2); }
    std::string name() const;

    bool operator==(const ClassLabel&) const = default;
};

/// Meteorological season mapping (Dec-Feb winter, Mar-May spring, Jun-Aug
/// summer, Sep-Nov autumn). Centralized so an astronomical mapping could be
/// swapped in at one place.
Season season_of_month(unsigned month);

/// Weekend iff Saturday or Sunday; everything else counts as working,
/// including public holidays.
ClassLabel classify(std::chrono::year_month_day date);

std::chrono::year_month_day parse_date(const std::string& iso);
std::string format_date(std::chrono::year_month_day date);

struct HourlyRecord {
    std::chrono::year_month_day date;
    int hour = 0;             // 0..23
    double value = 0.0;       // ug/m3; meaningful only when !missing
    bool missing = false;
    std::string station_id;
};

/// One day of hourly concentrations, ug/m3.
struct DailySeries {
    std::chrono::year_month_day date;
    std::array<double, kHoursPerDay> values{};
    ClassLabel label;
};

} // namespace airgen::data
