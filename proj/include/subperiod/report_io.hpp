#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subperiod/conjectures.hpp"
#include "subperiod/periodicity.hpp"

namespace subperiod {

enum class OutputFormat { Text, Csv, Json };

/// Parses "text" / "csv" / "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

// CSV uses ';' as separator and '\n' line endings; sets render as
// comma-joined integers. JSON is an array of objects whose keys mirror the
// CSV columns; absent values omit the key.

void write_period(std::ostream& out, const PeriodReport& report, OutputFormat format);
void write_scan(std::ostream& out, const std::vector<ScanRecord>& records, OutputFormat format);
void write_theorem(std::ostream& out, const std::vector<VerificationRecord>& records,
                   OutputFormat format);
/// Table rows are (set, notation, period).
void write_table(std::ostream& out, const std::vector<PeriodReport>& rows, OutputFormat format);

}  // namespace subperiod
