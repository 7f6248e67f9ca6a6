#include "airgen/data/daily_series.hpp"

#include <charconv>

#include "airgen/errors.hpp"

namespace airgen::data {

ClassLabel::ClassLabel(int id_) : id(id_) {
    if (id < 0 || id >= kNumClasses) {
        throw DataError("class id out of range: " + std::to_string(id));
    }
}

ClassLabel::ClassLabel(Season season, DayType day_type)
    : id(static_cast<int>(season) * 2 + static_cast<int>(day_type)) {}

std::string ClassLabel::name() const {
    static constexpr const char* kSeasons[] = {"winter", "spring", "summer", "autumn"};
    return std::string(kSeasons[static_cast<int>(season())]) +
           (day_type() == DayType::Weekend ? "-weekend" : "-working");
}

Season season_of_month(unsigned month) {
    switch (month) {
        case 12: case 1: case 2: return Season::Winter;
        case 3: case 4: case 5: return Season::Spring;
        case 6: case 7: case 8: return Season::Summer;
        case 9: case 10: case 11: return Season::Autumn;
        default: throw DataError("month out of range: " + std::to_string(month));
    }
}

ClassLabel classify(std::chrono::year_month_day date) {
    const Season season = season_of_month(static_cast<unsigned>(date.month()));
    const std::chrono::weekday wd{std::chrono::sys_days{date}};
    const DayType day_type = (wd == std::chrono::Saturday || wd == std::chrono::Sunday)
                                 ? DayType::Weekend
                                 : DayType::Working;
    return ClassLabel{season, day_type};
}

std::chrono::year_month_day parse_date(const std::string& iso) {
    int y = 0;
    unsigned m = 0, d = 0;
    const char* p = iso.data();
    const char* end = p + iso.size();
    auto r1 = std::from_chars(p, end, y);
    if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != '-') {
        throw DataError("bad date: '" + iso + "'");
    }
    auto r2 = std::from_chars(r1.ptr + 1, end, m);
    if (r2.ec != std::errc{} || r2.ptr == end || *r2.ptr != '-') {
        throw DataError("bad date: '" + iso + "'");
    }
    auto r3 = std::from_chars(r2.ptr + 1, end, d);
    if (r3.ec != std::errc{} || r3.ptr != end) {
        throw DataError("bad date: '" + iso + "'");
    }
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                          std::chrono::day{d}};
    if (!ymd.ok()) throw DataError("invalid calendar date: '" + iso + "'");
    return ymd;
}

std::string format_date(std::chrono::year_month_day date) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

} // namespace airgen::data
