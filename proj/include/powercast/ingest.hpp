#pragma once

#include "powercast/types.hpp"

#include <iosfwd>
#include <vector>

namespace powercast::ingest {

/// How rows whose measured fields are missing get resolved.
enum class FillPolicy { forward_fill, drop };

FillPolicy fill_policy_from_name(const std::string& name);
std::string fill_policy_name(FillPolicy policy);

/// Parses the semicolon-delimited source format:
///   Date;Time;Global_active_power;...;Sub_metering_3
/// with Date d/m/yyyy, Time HH:MM:SS and `?` (or an empty field) marking a
/// missing measurement. A row must be fully present or fully missing.
/// Throws InputError naming the offending line otherwise.
std::vector<PowerRecord> parse_dataset(std::istream& source);
std::vector<PowerRecord> parse_dataset_file(const std::string& path);

/// Writes records back in the source text format (header included, values
/// with three decimals, missing rows as `?`). parse_dataset of the output
/// reproduces the records exactly.
void serialize_records(const std::vector<PowerRecord>& records, std::ostream& out);

/// Keeps records with from <= timestamp <= to (inclusive bounds).
std::vector<PowerRecord> slice_by_time(const std::vector<PowerRecord>& records, Timestamp from,
                                       Timestamp to);

/// Resolves missing rows. forward_fill copies the measured fields of the
/// most recent fully present record (leading missing rows are dropped);
/// drop removes missing rows. Requires chronological input; throws if every
/// record is missing.
std::vector<PowerRecord> fill_missing(std::vector<PowerRecord> records, FillPolicy policy);

/// Buckets gap-free minute records into consecutive `interval_minutes`
/// spans aligned to the first timestamp and averages the selected feature
/// per bucket. A trailing partial bucket is dropped.
UnivariateSeries resample(const std::vector<PowerRecord>& records, Feature feature,
                          int interval_minutes);

}  // namespace powercast::ingest
