#include "powercast/types.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace powercast {

std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);                    // [0, 399]
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
                         static_cast<unsigned>(d) - 1;                            // [0, 365]
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;                   // [0, 146096]
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, int& month, int& day) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);                 // [0, 146096]
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;   // [0, 399]
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);                 // [0, 365]
    const unsigned mp = (5 * doy + 2) / 153;                                      // [0, 11]
    day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    month = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
    year = static_cast<int>(y + (month <= 2));
}

Timestamp make_timestamp(int year, int month, int day, int hour, int minute, int second) {
    return days_from_civil(year, month, day) * kSecondsPerDay + hour * kSecondsPerHour +
           minute * kSecondsPerMinute + second;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

}  // namespace

int day_of_week(Timestamp t) {
    // 1970-01-01 was a Thursday (index 3 with Monday = 0).
    return static_cast<int>(floor_mod(floor_div(t, kSecondsPerDay) + 3, 7));
}

int hour_of_day(Timestamp t) {
    return static_cast<int>(floor_mod(t, kSecondsPerDay) / kSecondsPerHour);
}

std::string format_date(Timestamp t) {
    int y, m, d;
    civil_from_days(floor_div(t, kSecondsPerDay), y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%d/%d/%d", d, m, y);
    return buf;
}

std::string format_time(Timestamp t) {
    const std::int64_t s = floor_mod(t, kSecondsPerDay);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02d:%02d:%02d", static_cast<int>(s / 3600),
                  static_cast<int>((s % 3600) / 60), static_cast<int>(s % 60));
    return buf;
}

std::string format_iso(Timestamp t) {
    int y, m, d;
    civil_from_days(floor_div(t, kSecondsPerDay), y, m, d);
    const std::int64_t s = floor_mod(t, kSecondsPerDay);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d", y, m, d,
                  static_cast<int>(s / 3600), static_cast<int>((s % 3600) / 60),
                  static_cast<int>(s % 60));
    return buf;
}

namespace {

int parse_int(const std::string& text, std::size_t begin, std::size_t end, const char* what) {
    int value = 0;
    const auto res = std::from_chars(text.data() + begin, text.data() + end, value);
    if (res.ec != std::errc{} || res.ptr != text.data() + end)
        throw InputError("invalid " + std::string(what) + " in '" + text + "'");
    return value;
}

bool valid_date(int y, int m, int d) {
    if (m < 1 || m > 12 || d < 1) return false;
    static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int len = lengths[static_cast<std::size_t>(m - 1)];
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap) len = 29;
    return d <= len;
}

}  // namespace

Timestamp parse_iso(const std::string& text) {
    // yyyy-mm-ddTHH:MM:SS, separator 'T' or ' '.
    if (text.size() != 19 || text[4] != '-' || text[7] != '-' ||
        (text[10] != 'T' && text[10] != ' ') || text[13] != ':' || text[16] != ':')
        throw InputError("invalid timestamp '" + text + "' (expected yyyy-mm-ddTHH:MM:SS)");
    const int y = parse_int(text, 0, 4, "year");
    const int mo = parse_int(text, 5, 7, "month");
    const int d = parse_int(text, 8, 10, "day");
    const int h = parse_int(text, 11, 13, "hour");
    const int mi = parse_int(text, 14, 16, "minute");
    const int s = parse_int(text, 17, 19, "second");
    if (!valid_date(y, mo, d) || h > 23 || mi > 59 || s > 59)
        throw InputError("invalid timestamp '" + text + "'");
    return make_timestamp(y, mo, d, h, mi, s);
}

Timestamp parse_dmy_date(const std::string& text) {
    const auto slash1 = text.find('/');
    const auto slash2 = text.find('/', slash1 == std::string::npos ? slash1 : slash1 + 1);
    if (slash1 == std::string::npos || slash2 == std::string::npos)
        throw InputError("invalid date '" + text + "' (expected d/m/yyyy)");
    const int d = parse_int(text, 0, slash1, "day");
    const int m = parse_int(text, slash1 + 1, slash2, "month");
    const int y = parse_int(text, slash2 + 1, text.size(), "year");
    if (!valid_date(y, m, d)) throw InputError("invalid date '" + text + "'");
    return make_timestamp(y, m, d, 0, 0, 0);
}

double feature_value(const PowerRecord& r, Feature feature) {
    switch (feature) {
        case Feature::global_active_power: return r.global_active_power;
        case Feature::global_reactive_power: return r.global_reactive_power;
        case Feature::voltage: return r.voltage;
        case Feature::global_intensity: return r.global_intensity;
        case Feature::sub_metering_1: return r.sub_metering_1;
        case Feature::sub_metering_2: return r.sub_metering_2;
        case Feature::sub_metering_3: return r.sub_metering_3;
    }
    throw std::logic_error("unreachable feature");
}

Feature feature_from_name(const std::string& name) {
    if (name == "global_active_power") return Feature::global_active_power;
    if (name == "global_reactive_power") return Feature::global_reactive_power;
    if (name == "voltage") return Feature::voltage;
    if (name == "global_intensity") return Feature::global_intensity;
    if (name == "sub_metering_1") return Feature::sub_metering_1;
    if (name == "sub_metering_2") return Feature::sub_metering_2;
    if (name == "sub_metering_3") return Feature::sub_metering_3;
    throw InputError("unknown feature '" + name + "'");
}

std::string feature_name(Feature feature) {
    switch (feature) {
        case Feature::global_active_power: return "global_active_power";
        case Feature::global_reactive_power: return "global_reactive_power";
        case Feature::voltage: return "voltage";
        case Feature::global_intensity: return "global_intensity";
        case Feature::sub_metering_1: return "sub_metering_1";
        case Feature::sub_metering_2: return "sub_metering_2";
        case Feature::sub_metering_3: return "sub_metering_3";
    }
    throw std::logic_error("unreachable feature");
}

}  // namespace powercast
