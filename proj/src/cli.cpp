#include "subperiod/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subperiod/conjectures.hpp"
#include "subperiod/family.hpp"
#include "subperiod/game_core.hpp"
#include "subperiod/periodicity.hpp"
#include "subperiod/report_io.hpp"
#include "subperiod/subtraction_set.hpp"

namespace subperiod {
namespace {

uint32_t parse_u32(const std::string& text) {
    uint32_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [next, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc{} || next != end) {
        throw std::invalid_argument("invalid integer '" + text + "'");
    }
    return value;
}

struct Range {
    uint32_t lo = 0;
    uint32_t hi = 0;
};

// "7" means 7..7; "3..15" is an inclusive range.
Range parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const uint32_t value = parse_u32(text);
        return {value, value};
    }
    const Range range{parse_u32(text.substr(0, dots)), parse_u32(text.substr(dots + 2))};
    if (range.lo > range.hi) {
        throw std::invalid_argument("empty range '" + text + "'");
    }
    return range;
}

std::vector<bool> parse_selectors(const std::string& text) {
    std::vector<bool> selectors;
    selectors.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("selectors must be a string of 0s and 1s, got '" + text +
                                        "'");
        }
        selectors.push_back(c == '1');
    }
    return selectors;
}

uint64_t resolve_cap(const std::optional<uint64_t>& flag_cap, std::ostream& err) {
    if (flag_cap) return *flag_cap;
    if (const char* env = std::getenv("SUBPERIOD_HORIZON_CAP")) {
        const std::string text(env);
        uint64_t value = 0;
        const char* begin = text.data();
        const char* end = begin + text.size();
        const auto [next, ec] = std::from_chars(begin, end, value);
        if (!text.empty() && ec == std::errc{} && next == end && value > 0) {
            return value;
        }
        err << "warning: ignoring invalid SUBPERIOD_HORIZON_CAP '" << text << "'\n";
    }
    return kDefaultHorizonCap;
}

std::vector<PeriodReport> table_rows(uint32_t table_id, const HorizonPolicy& policy) {
    std::vector<PeriodReport> rows;
    const auto add = [&](std::vector<uint32_t> elements) {
        rows.push_back(find_period(SubtractionSet(std::move(elements)), policy));
    };
    switch (table_id) {
        case 1:
            for (uint32_t k = 3; k <= 15; ++k) add({1, 2, k});
            break;
        case 2:
            for (uint32_t k = 4; k <= 18; ++k) add({1, 3, k});
            break;
        case 3:
            for (uint32_t k = 2; k <= 14; ++k) add({1, k, k + 1});
            break;
        case 4:
            add({1, 4, 10});
            add({1, 4, 15});
            add({1, 4, 20});
            add({1, 6, 9});
            add({1, 6, 14});
            add({1, 6, 16});
            break;
        default:
            throw std::invalid_argument("table id must be 1..4");
    }
    return rows;
}

int theorem_exit_code(const std::vector<VerificationRecord>& records) {
    bool any_undefined = false;
    for (const VerificationRecord& record : records) {
        if (record.status == VerifyStatus::PeriodMismatch ||
            record.status == VerifyStatus::PreperiodMismatch) {
            return 2;
        }
        if (record.status == VerifyStatus::Undefined) any_undefined = true;
    }
    return any_undefined ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"subtraction game analyzer: sequences, certified periods, formula checks"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::optional<uint64_t> cap_flag;
    std::string out_path;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format: text, csv, or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--horizon-cap", cap_flag,
                        "largest horizon the period search may grow to");
        cmd->add_option("--out", out_path, "write results to this file instead of stdout");
    };

    std::string set_text;
    uint64_t seq_length = 0;
    std::string seq_mode = "outcome";
    CLI::App* seq_cmd = app.add_subcommand("seq", "print the outcome or Grundy sequence");
    seq_cmd->add_option("--set", set_text, "subtraction set, e.g. 1,3,7,8")->required();
    seq_cmd->add_option("--n,--length", seq_length, "number of positions")->required();
    seq_cmd->add_option("mode", seq_mode, "outcome (default) or grundy")
        ->check(CLI::IsMember({"outcome", "grundy"}));
    add_common(seq_cmd);

    CLI::App* period_cmd =
        app.add_subcommand("period", "find and certify the eventual period of one set");
    period_cmd->add_option("--set", set_text, "subtraction set, e.g. 1,3,7,8")->required();
    add_common(period_cmd);

    std::string theorem_id;
    std::optional<std::string> k_range_text;
    std::optional<std::string> s_range_text;
    std::string selectors_text;
    std::optional<std::string> s1_range_text;
    std::optional<std::string> s2_range_text;
    CLI::App* theorem_cmd =
        app.add_subcommand("theorem", "check a closed-form period formula against ground truth");
    theorem_cmd->add_option("--id", theorem_id, "formula id: 1, 2, 3, 4, or eq1")
        ->required()
        ->check(CLI::IsMember({"1", "2", "3", "4", "eq1"}));
    theorem_cmd->add_option("--k", k_range_text, "k range for ids 1-3, e.g. 3..15");
    theorem_cmd->add_option("--s", s_range_text, "s range for id 4");
    theorem_cmd->add_option("--selectors", selectors_text,
                            "selector bits for id 4, e.g. 1010 (default: none)");
    theorem_cmd->add_option("--s1", s1_range_text, "s1 range for id eq1");
    theorem_cmd->add_option("--s2", s2_range_text, "s2 range for id eq1");
    add_common(theorem_cmd);

    uint32_t table_id = 0;
    CLI::App* table_cmd = app.add_subcommand("table", "reproduce one of the four result tables");
    table_cmd->add_option("--id", table_id, "table id: 1..4")->required();
    add_common(table_cmd);

    std::string family_text;
    std::string range_text;
    CLI::App* scan_cmd =
        app.add_subcommand("scan", "find periods across a parameterized family of sets");
    scan_cmd->add_option("--family", family_text, "family over k, e.g. \"1,4,5k\"")->required();
    scan_cmd->add_option("--range", range_text, "k range, e.g. 2..4")->required();
    add_common(scan_cmd);

    uint64_t move_position = 0;
    CLI::App* move_cmd = app.add_subcommand("move", "print an optimal move for one position");
    move_cmd->add_option("--set", set_text, "subtraction set, e.g. 1,2,3")->required();
    move_cmd->add_option("--pos", move_position, "heap size to move from")->required();
    add_common(move_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        const OutputFormat format = parse_format(format_name);
        const HorizonPolicy policy{resolve_cap(cap_flag, err)};

        std::ofstream file;
        std::ostream* sink = &out;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) {
                err << "error: cannot open '" << out_path << "' for writing\n";
                return 1;
            }
            sink = &file;
        }

        if (seq_cmd->parsed()) {
            const SubtractionSet set = SubtractionSet::parse(set_text);
            if (seq_mode == "outcome") {
                *sink << outcome_sequence(set, seq_length).to_digit_string(0, seq_length) << '\n';
            } else {
                const GrundySequence grundy = grundy_sequence(set, seq_length);
                for (uint64_t p = 0; p < grundy.size(); ++p) {
                    if (p) *sink << ' ';
                    *sink << grundy[p];
                }
                *sink << '\n';
            }
            return 0;
        }
        if (period_cmd->parsed()) {
            write_period(*sink, find_period(SubtractionSet::parse(set_text), policy), format);
            return 0;
        }
        if (theorem_cmd->parsed()) {
            std::vector<VerificationRecord> records;
            if (theorem_id == "1" || theorem_id == "2" || theorem_id == "3") {
                if (!k_range_text) {
                    err << "error: theorem --id " << theorem_id << " requires --k\n";
                    return 1;
                }
                const Range k = parse_range(*k_range_text);
                records = theorem_id == "1"   ? verify_t1(k.lo, k.hi, policy)
                          : theorem_id == "2" ? verify_t2(k.lo, k.hi, policy)
                                              : verify_t3(k.lo, k.hi, policy);
            } else if (theorem_id == "4") {
                if (!s_range_text) {
                    err << "error: theorem --id 4 requires --s\n";
                    return 1;
                }
                const Range s = parse_range(*s_range_text);
                records = verify_t4(s.lo, s.hi, parse_selectors(selectors_text), policy);
            } else {
                if (!s1_range_text || !s2_range_text) {
                    err << "error: theorem --id eq1 requires --s1 and --s2\n";
                    return 1;
                }
                const Range s1 = parse_range(*s1_range_text);
                const Range s2 = parse_range(*s2_range_text);
                records = verify_eq1(s1.lo, s1.hi, s2.lo, s2.hi, policy);
            }
            write_theorem(*sink, records, format);
            return theorem_exit_code(records);
        }
        if (table_cmd->parsed()) {
            write_table(*sink, table_rows(table_id, policy), format);
            return 0;
        }
        if (scan_cmd->parsed()) {
            const FamilyExpression family = FamilyExpression::parse(family_text);
            const Range range = parse_range(range_text);
            write_scan(*sink, scan_family(family, range.lo, range.hi, policy), format);
            return 0;
        }
        if (move_cmd->parsed()) {
            const SubtractionSet set = SubtractionSet::parse(set_text);
            if (const auto move = best_move(set, move_position)) {
                *sink << "take " << *move << " → " << (move_position - *move) << '\n';
            } else {
                *sink << "P-position\n";
            }
            return 0;
        }
        err << "error: no subcommand given\n";
        return 1;
    } catch (const std::exception& error) {
        err << "error: " << error.what() << '\n';
        return 1;
    }
}

}  // namespace subperiod
