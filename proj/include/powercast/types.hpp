#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace powercast {

/// Thrown for malformed user input (bad files, malformed rows, invalid
/// options). The CLI maps it to exit code 2; every other failure is 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Seconds since 1970-01-01 00:00:00 (no time zone; the dataset is naive).
using Timestamp = std::int64_t;

constexpr std::int64_t kSecondsPerMinute = 60;
constexpr std::int64_t kSecondsPerHour = 3600;
constexpr std::int64_t kSecondsPerDay = 86400;

// Gregorian <-> epoch-day conversions, proleptic calendar.
std::int64_t days_from_civil(int year, int month, int day);
void civil_from_days(std::int64_t days, int& year, int& month, int& day);

Timestamp make_timestamp(int year, int month, int day, int hour, int minute, int second = 0);

/// Weekday with Monday = 0 .. Sunday = 6.
int day_of_week(Timestamp t);
int hour_of_day(Timestamp t);

std::string format_date(Timestamp t);  // d/m/yyyy, as in the source files
std::string format_time(Timestamp t);  // HH:MM:SS
std::string format_iso(Timestamp t);   // yyyy-mm-ddTHH:MM:SS

/// Parses yyyy-mm-ddTHH:MM:SS (the 'T' may be a space); throws InputError.
Timestamp parse_iso(const std::string& text);
/// Parses d/m/yyyy; returns the timestamp of that day's midnight.
Timestamp parse_dmy_date(const std::string& text);

/// One minute-resolution measurement row. The source marks whole rows as
/// missing, so a single flag covers all measured fields.
struct PowerRecord {
    Timestamp timestamp = 0;
    double global_active_power = 0.0;    // kW
    double global_reactive_power = 0.0;  // kW
    double voltage = 0.0;                // V
    double global_intensity = 0.0;       // A
    double sub_metering_1 = 0.0;         // Wh
    double sub_metering_2 = 0.0;         // Wh
    double sub_metering_3 = 0.0;         // Wh
    bool missing = false;

    bool operator==(const PowerRecord&) const = default;
};

/// Measured columns of the dataset, in file order.
enum class Feature {
    global_active_power,
    global_reactive_power,
    voltage,
    global_intensity,
    sub_metering_1,
    sub_metering_2,
    sub_metering_3,
};

double feature_value(const PowerRecord& record, Feature feature);
Feature feature_from_name(const std::string& name);
std::string feature_name(Feature feature);

/// Uniformly sampled, chronologically ordered value sequence. Contains no
/// missing markers; gaps are resolved before construction.
struct UnivariateSeries {
    Timestamp start = 0;
    std::int64_t step_seconds = 0;
    Eigen::VectorXd values;

    Eigen::Index size() const { return values.size(); }
    Timestamp time_at(Eigen::Index i) const { return start + i * step_seconds; }
};

}  // namespace powercast
