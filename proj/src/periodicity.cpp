#include "subperiod/periodicity.hpp"

#include <algorithm>
#include <bit>

namespace subperiod {
namespace {

constexpr uint64_t low_mask(uint64_t bits) {
    return bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
}

}  // namespace

std::optional<uint64_t> last_shift_mismatch(const OutcomeSequence& seq, uint64_t shift) {
    const uint64_t n = seq.size();
    if (shift >= n) return std::nullopt;
    const uint64_t limit = n - shift;  // valid q range is [0, limit)
    const auto words = seq.words();
    const uint64_t word_shift = shift >> 6;
    const uint32_t bit_shift = shift & 63;
    const uint64_t top_word = (limit - 1) >> 6;
    const auto word_at = [&words](uint64_t i) -> uint64_t {
        return i < words.size() ? words[i] : 0;
    };
    for (uint64_t w = top_word + 1; w-- > 0;) {
        uint64_t shifted = word_at(w + word_shift) >> bit_shift;
        if (bit_shift != 0) shifted |= word_at(w + word_shift + 1) << (64 - bit_shift);
        uint64_t diff = shifted ^ words[w];
        if (w == top_word) diff &= low_mask(((limit - 1) & 63) + 1);
        if (diff) return (w << 6) + (63 - std::countl_zero(diff));
    }
    return std::nullopt;
}

std::string format_linear_period(const PeriodReport& report) {
    return report.prefix + "(" + report.block + ")";
}

PeriodReport find_period(const SubtractionSet& set, const HorizonPolicy& policy) {
    const uint64_t window = set.max();
    const uint64_t initial = 4 * window + 64;
    if (policy.cap < initial) throw HorizonCapError(set, policy.cap, initial);
    uint64_t horizon = initial;
    while (true) {
        const OutcomeSequence seq = outcome_sequence(set, horizon);
        if (const auto cert = detect_period(seq, window)) {
            return PeriodReport{
                set,
                *cert,
                seq.to_digit_string(0, cert->preperiod),
                seq.to_digit_string(cert->preperiod, cert->preperiod + cert->period),
            };
        }
        if (horizon >= policy.cap) throw HorizonCapError(set, policy.cap);
        horizon = std::min(horizon * 2, policy.cap);
    }
}

}  // namespace subperiod
