#include "powercast/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace powercast::ingest {

namespace {

constexpr int kFieldCount = 9;

const char* kHeader =
    "Date;Time;Global_active_power;Global_reactive_power;Voltage;Global_intensity;"
    "Sub_metering_1;Sub_metering_2;Sub_metering_3";

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw InputError("line " + std::to_string(line) + ": " + message);
}

// Splits into exactly kFieldCount fields; a trailing '\r' is stripped first.
bool split_fields(std::string& line, std::array<std::string_view, kFieldCount>& out) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t begin = 0;
    int field = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ';') {
            if (field >= kFieldCount) return false;
            out[static_cast<std::size_t>(field++)] =
                std::string_view(line.data() + begin, i - begin);
            begin = i + 1;
        }
    }
    return field == kFieldCount;
}

bool is_missing_marker(std::string_view field) { return field == "?" || field.empty(); }

double parse_measure(std::string_view field, std::size_t line, const char* name) {
    double value = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
        fail(line, std::string("non-numeric value '") + std::string(field) + "' in " + name);
    return value;
}

Timestamp parse_row_timestamp(std::string_view date, std::string_view time, std::size_t line) {
    Timestamp day = 0;
    try {
        day = parse_dmy_date(std::string(date));
    } catch (const InputError& e) {
        fail(line, e.what());
    }
    if (time.size() != 8 || time[2] != ':' || time[5] != ':')
        fail(line, "invalid time '" + std::string(time) + "' (expected HH:MM:SS)");
    int h = 0, m = 0, s = 0;
    auto num = [&](std::size_t pos) {
        int v = 0;
        const auto res = std::from_chars(time.data() + pos, time.data() + pos + 2, v);
        if (res.ec != std::errc{} || res.ptr != time.data() + pos + 2)
            fail(line, "invalid time '" + std::string(time) + "'");
        return v;
    };
    h = num(0);
    m = num(3);
    s = num(6);
    if (h > 23 || m > 59 || s > 59) fail(line, "invalid time '" + std::string(time) + "'");
    if (s != 0) fail(line, "timestamp not minute-aligned (seconds must be 00)");
    return day + h * kSecondsPerHour + m * kSecondsPerMinute;
}

}  // namespace

FillPolicy fill_policy_from_name(const std::string& name) {
    if (name == "forward_fill") return FillPolicy::forward_fill;
    if (name == "drop") return FillPolicy::drop;
    throw InputError("unknown fill policy '" + name + "' (expected forward_fill or drop)");
}

std::string fill_policy_name(FillPolicy policy) {
    return policy == FillPolicy::forward_fill ? "forward_fill" : "drop";
}

std::vector<PowerRecord> parse_dataset(std::istream& source) {
    std::string line;
    if (!std::getline(source, line)) throw InputError("empty input");

    std::vector<PowerRecord> records;
    std::array<std::string_view, kFieldCount> fields;
    std::size_t line_no = 1;  // header was line 1
    while (std::getline(source, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        if (!split_fields(line, fields)) fail(line_no, "expected 9 fields");

        PowerRecord rec;
        rec.timestamp = parse_row_timestamp(fields[0], fields[1], line_no);

        int missing_count = 0;
        for (int i = 2; i < kFieldCount; ++i)
            if (is_missing_marker(fields[static_cast<std::size_t>(i)])) ++missing_count;

        if (missing_count == kFieldCount - 2) {
            rec.missing = true;
        } else if (missing_count != 0) {
            fail(line_no, "partially missing row (the source marks whole rows)");
        } else {
            rec.global_active_power = parse_measure(fields[2], line_no, "Global_active_power");
            rec.global_reactive_power = parse_measure(fields[3], line_no, "Global_reactive_power");
            rec.voltage = parse_measure(fields[4], line_no, "Voltage");
            rec.global_intensity = parse_measure(fields[5], line_no, "Global_intensity");
            rec.sub_metering_1 = parse_measure(fields[6], line_no, "Sub_metering_1");
            rec.sub_metering_2 = parse_measure(fields[7], line_no, "Sub_metering_2");
            rec.sub_metering_3 = parse_measure(fields[8], line_no, "Sub_metering_3");
            if (rec.global_active_power < 0 || rec.global_reactive_power < 0 ||
                rec.global_intensity < 0 || rec.sub_metering_1 < 0 || rec.sub_metering_2 < 0 ||
                rec.sub_metering_3 < 0)
                fail(line_no, "negative measurement");
            if (rec.voltage <= 0) fail(line_no, "voltage must be positive");
        }
        records.push_back(rec);
    }
    if (records.empty()) throw InputError("empty input (no data rows)");
    return records;
}

std::vector<PowerRecord> parse_dataset_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_dataset(in);
}

void serialize_records(const std::vector<PowerRecord>& records, std::ostream& out) {
    out << kHeader << '\n';
    char buf[200];
    for (const PowerRecord& r : records) {
        const std::string date = format_date(r.timestamp);
        const std::string time = format_time(r.timestamp);
        if (r.missing) {
            out << date << ';' << time << ";?;?;?;?;?;?;?\n";
        } else {
            std::snprintf(buf, sizeof(buf), "%s;%s;%.3f;%.3f;%.3f;%.3f;%.3f;%.3f;%.3f\n",
                          date.c_str(), time.c_str(), r.global_active_power,
                          r.global_reactive_power, r.voltage, r.global_intensity,
                          r.sub_metering_1, r.sub_metering_2, r.sub_metering_3);
            out << buf;
        }
    }
}

std::vector<PowerRecord> slice_by_time(const std::vector<PowerRecord>& records, Timestamp from,
                                       Timestamp to) {
    std::vector<PowerRecord> out;
    for (const PowerRecord& r : records)
        if (r.timestamp >= from && r.timestamp <= to) out.push_back(r);
    return out;
}

std::vector<PowerRecord> fill_missing(std::vector<PowerRecord> records, FillPolicy policy) {
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].timestamp <= records[i - 1].timestamp)
            throw InputError("records not in chronological order at index " + std::to_string(i));

    std::vector<PowerRecord> out;
    out.reserve(records.size());
    if (policy == FillPolicy::drop) {
        for (PowerRecord& r : records)
            if (!r.missing) out.push_back(r);
    } else {
        const PowerRecord* last_present = nullptr;
        for (PowerRecord& r : records) {
            if (!r.missing) {
                out.push_back(r);
                last_present = &out.back();
            } else if (last_present != nullptr) {
                PowerRecord filled = *last_present;
                filled.timestamp = r.timestamp;
                out.push_back(filled);
                last_present = &out.back();
            }
            // leading missing rows have no reference and are dropped
        }
    }
    if (out.empty()) throw InputError("all records missing; nothing to fill");
    return out;
}

UnivariateSeries resample(const std::vector<PowerRecord>& records, Feature feature,
                          int interval_minutes) {
    if (records.empty()) throw InputError("cannot resample an empty record set");
    if (interval_minutes < 1) throw InputError("resample interval must be a positive minute count");
    for (const PowerRecord& r : records)
        if (r.missing)
            throw InputError("cannot resample records with missing values (fill them first)");
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].timestamp - records[i - 1].timestamp != kSecondsPerMinute)
            throw InputError("records are not gap-free at one-minute steps (index " +
                             std::to_string(i) + ")");

    const auto per_bucket = static_cast<std::size_t>(interval_minutes);
    const std::size_t buckets = records.size() / per_bucket;
    if (buckets == 0)
        throw InputError("insufficient data: fewer records than one resample bucket");

    UnivariateSeries series;
    series.start = records.front().timestamp;
    series.step_seconds = static_cast<std::int64_t>(interval_minutes) * kSecondsPerMinute;
    series.values.resize(static_cast<Eigen::Index>(buckets));
    for (std::size_t b = 0; b < buckets; ++b) {
        double sum = 0.0;
        for (std::size_t i = b * per_bucket; i < (b + 1) * per_bucket; ++i)
            sum += feature_value(records[i], feature);
        series.values[static_cast<Eigen::Index>(b)] = sum / static_cast<double>(per_bucket);
    }
    return series;
}

}  // namespace powercast::ingest
