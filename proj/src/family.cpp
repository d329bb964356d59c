#include "subperiod/family.hpp"

#include <charconv>
#include <limits>
#include <optional>

namespace subperiod {
namespace {

// Reads digits at `pos`, if any, advancing past them. Returns nothing when
// `pos` does not start with a digit.
std::optional<uint32_t> read_integer(const std::string& text, std::size_t& pos) {
    uint32_t value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    const auto [next, ec] = std::from_chars(begin, end, value);
    if (next == begin) return std::nullopt;
    if (ec == std::errc::result_out_of_range) {
        throw FamilyParseError(pos, "integer out of range");
    }
    pos += static_cast<std::size_t>(next - begin);
    return value;
}

void skip_spaces(const std::string& text, std::size_t& pos) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
}

}  // namespace

FamilyExpression FamilyExpression::parse(const std::string& text) {
    FamilyExpression expr;
    std::size_t pos = 0;
    while (true) {
        skip_spaces(text, pos);
        const std::size_t term_start = pos;
        const std::optional<uint32_t> leading = read_integer(text, pos);
        FamilyTerm term;
        if (pos < text.size() && text[pos] == 'k') {
            ++pos;
            term.scale = leading.value_or(1);
            if (pos < text.size() && text[pos] == '+') {
                ++pos;
                const std::size_t offset_start = pos;
                const std::optional<uint32_t> offset = read_integer(text, pos);
                if (!offset) throw FamilyParseError(offset_start, "expected integer after '+'");
                term.offset = *offset;
            }
        } else if (leading) {
            term.offset = *leading;
        } else {
            throw FamilyParseError(term_start, "expected integer or 'k'");
        }
        if (term.scale == 0 && term.offset == 0) {
            throw FamilyParseError(term_start, "term is identically zero");
        }
        expr.terms_.push_back(term);
        skip_spaces(text, pos);
        if (pos == text.size()) break;
        if (text[pos] != ',') {
            throw FamilyParseError(pos, std::string("unexpected character '") + text[pos] + "'");
        }
        ++pos;
    }
    return expr;
}

std::vector<uint32_t> FamilyExpression::instantiate(uint32_t k) const {
    std::vector<uint32_t> elements;
    elements.reserve(terms_.size());
    for (const FamilyTerm& term : terms_) {
        const uint64_t value = uint64_t{term.scale} * k + term.offset;
        if (value > std::numeric_limits<uint32_t>::max()) {
            throw std::overflow_error("family element " + std::to_string(value) +
                                      " exceeds the 32-bit move-size limit");
        }
        elements.push_back(static_cast<uint32_t>(value));
    }
    return elements;
}

std::string FamilyExpression::to_string() const {
    std::string out;
    for (const FamilyTerm& term : terms_) {
        if (!out.empty()) out += ',';
        if (term.scale == 0) {
            out += std::to_string(term.offset);
        } else {
            if (term.scale != 1) out += std::to_string(term.scale);
            out += 'k';
            if (term.offset != 0) out += '+' + std::to_string(term.offset);
        }
    }
    return out;
}

}  // namespace subperiod
