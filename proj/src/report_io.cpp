#include "subperiod/report_io.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace subperiod {
namespace {

using nlohmann::ordered_json;

std::string join_elements(const std::vector<uint32_t>& elements) {
    std::string out;
    for (uint32_t e : elements) {
        if (!out.empty()) out += ',';
        out += std::to_string(e);
    }
    return out;
}

ordered_json report_json(const PeriodReport& report) {
    const PeriodicityCertificate& cert = report.certificate;
    return ordered_json{{"set", report.set.elements()},
                        {"preperiod", cert.preperiod},
                        {"period", cert.period},
                        {"block", report.block},
                        {"horizon", cert.horizon}};
}

void write_report_csv_fields(std::ostream& out, const PeriodReport& report) {
    const PeriodicityCertificate& cert = report.certificate;
    out << report.set.to_string() << ';' << cert.preperiod << ';' << cert.period << ';'
        << report.block << ';' << cert.horizon;
}

void write_report_text(std::ostream& out, const PeriodReport& report) {
    const PeriodicityCertificate& cert = report.certificate;
    out << "set=" << report.set.to_string() << " preperiod=" << cert.preperiod
        << " period=" << cert.period << " block=" << report.block
        << " notation=" << format_linear_period(report);
}

void dump_json(std::ostream& out, const ordered_json& value) {
    out << value.dump(2) << '\n';
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

void write_period(std::ostream& out, const PeriodReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text:
            write_report_text(out, report);
            out << '\n';
            return;
        case OutputFormat::Csv:
            out << "set;preperiod;period;block;horizon\n";
            write_report_csv_fields(out, report);
            out << '\n';
            return;
        case OutputFormat::Json:
            dump_json(out, ordered_json::array({report_json(report)}));
            return;
    }
}

void write_scan(std::ostream& out, const std::vector<ScanRecord>& records, OutputFormat format) {
    const bool any_abnormal =
        std::any_of(records.begin(), records.end(),
                    [](const ScanRecord& r) { return r.status != ScanStatus::Ok; });
    switch (format) {
        case OutputFormat::Text:
            for (const ScanRecord& record : records) {
                if (record.report) {
                    write_report_text(out, *record.report);
                } else {
                    out << "set=" << join_elements(record.elements)
                        << " status=" << to_string(record.status) << " note=" << record.note;
                }
                out << '\n';
            }
            return;
        case OutputFormat::Csv:
            out << "set;preperiod;period;block;horizon";
            if (any_abnormal) out << ";status;note";
            out << '\n';
            for (const ScanRecord& record : records) {
                if (record.report) {
                    write_report_csv_fields(out, *record.report);
                    if (any_abnormal) out << ";" << to_string(record.status) << ';' << record.note;
                } else {
                    out << join_elements(record.elements) << ";;;;;"
                        << to_string(record.status) << ';' << record.note;
                }
                out << '\n';
            }
            return;
        case OutputFormat::Json: {
            ordered_json rows = ordered_json::array();
            for (const ScanRecord& record : records) {
                ordered_json row;
                if (record.report) {
                    row = report_json(*record.report);
                } else {
                    row = ordered_json{{"set", record.elements}};
                }
                if (any_abnormal) {
                    row["status"] = to_string(record.status);
                    row["note"] = record.note;
                }
                rows.push_back(std::move(row));
            }
            dump_json(out, rows);
            return;
        }
    }
}

void write_theorem(std::ostream& out, const std::vector<VerificationRecord>& records,
                   OutputFormat format) {
    const bool any_undefined =
        std::any_of(records.begin(), records.end(), [](const VerificationRecord& r) {
            return r.status == VerifyStatus::Undefined;
        });
    switch (format) {
        case OutputFormat::Text:
            for (const VerificationRecord& record : records) {
                out << "set=" << record.prediction.set.to_string()
                    << " predicted=" << record.prediction.predicted_period;
                if (record.computed) {
                    out << " computed=" << record.computed->certificate.period
                        << " preperiod=" << record.computed->certificate.preperiod;
                }
                out << " status=" << to_string(record.status);
                if (!record.note.empty()) out << " note=" << record.note;
                out << '\n';
            }
            return;
        case OutputFormat::Csv:
            out << "set;preperiod;period;block;horizon;predicted;status";
            if (any_undefined) out << ";note";
            out << '\n';
            for (const VerificationRecord& record : records) {
                if (record.computed) {
                    write_report_csv_fields(out, *record.computed);
                } else {
                    out << record.prediction.set.to_string() << ";;;;";
                }
                out << ';' << record.prediction.predicted_period << ';'
                    << to_string(record.status);
                if (any_undefined) out << ';' << record.note;
                out << '\n';
            }
            return;
        case OutputFormat::Json: {
            ordered_json rows = ordered_json::array();
            for (const VerificationRecord& record : records) {
                ordered_json row;
                if (record.computed) {
                    row = report_json(*record.computed);
                } else {
                    row = ordered_json{{"set", record.prediction.set.elements()}};
                }
                row["predicted"] = record.prediction.predicted_period;
                row["status"] = to_string(record.status);
                if (any_undefined) row["note"] = record.note;
                rows.push_back(std::move(row));
            }
            dump_json(out, rows);
            return;
        }
    }
}

void write_table(std::ostream& out, const std::vector<PeriodReport>& rows, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text:
            for (const PeriodReport& row : rows) {
                out << row.set.to_string() << ' ' << format_linear_period(row) << ' '
                    << row.certificate.period << '\n';
            }
            return;
        case OutputFormat::Csv:
            out << "set;notation;period\n";
            for (const PeriodReport& row : rows) {
                out << row.set.to_string() << ';' << format_linear_period(row) << ';'
                    << row.certificate.period << '\n';
            }
            return;
        case OutputFormat::Json: {
            ordered_json items = ordered_json::array();
            for (const PeriodReport& row : rows) {
                items.push_back(ordered_json{{"set", row.set.elements()},
                                             {"notation", format_linear_period(row)},
                                             {"period", row.certificate.period}});
            }
            dump_json(out, items);
            return;
        }
    }
}

}  // namespace subperiod
