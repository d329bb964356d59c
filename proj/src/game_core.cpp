#include "subperiod/game_core.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace subperiod {
namespace {

constexpr uint64_t low_mask(uint64_t bits) {
    return bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
}

}  // namespace

uint32_t mex(std::span<const uint32_t> values) {
    std::vector<bool> present(values.size() + 1, false);
    for (uint32_t v : values) {
        if (v < present.size()) present[v] = true;
    }
    uint32_t g = 0;
    while (present[g]) ++g;
    return g;
}

std::string OutcomeSequence::to_digit_string(uint64_t begin, uint64_t end) const {
    if (begin > end || end > length_) {
        throw std::out_of_range("digit range [" + std::to_string(begin) + ", " +
                                std::to_string(end) + ") exceeds sequence length " +
                                std::to_string(length_));
    }
    std::string out;
    out.reserve(end - begin);
    for (uint64_t p = begin; p < end; ++p) {
        out += (*this)[p] ? '1' : '0';
    }
    return out;
}

// The N-position recurrence N[p] = OR over s of P[p-s] is a shift-OR over the
// P bitmask, so whole 64-position words are evaluated at once. Moves of 64 or
// more tokens only read already finished words; shorter moves also feed back
// into the word being built, which is resolved in rounds that each finalize at
// least min(S) more bits of the word.
OutcomeSequence outcome_sequence(const SubtractionSet& set, uint64_t length) {
    if (length == 0) {
        throw std::invalid_argument("sequence length must be positive");
    }
    const uint64_t word_count = (length + 63) >> 6;
    std::vector<uint64_t> nwords(word_count);
    std::vector<uint64_t> pwords(word_count);

    std::vector<uint32_t> inword;  // moves below 64, ascending
    std::vector<std::pair<uint64_t, uint32_t>> cross;  // (word offset, bit offset) per move >= 64
    for (uint32_t s : set.elements()) {
        if (s < 64) {
            inword.push_back(s);
        } else {
            cross.emplace_back(uint64_t{s} >> 6, s & 63u);
        }
    }
    const uint32_t smin = inword.empty() ? 64 : inword.front();

    for (uint64_t w = 0; w < word_count; ++w) {
        uint64_t n = 0;
        if (w >= 1) {
            for (uint32_t s : inword) n |= pwords[w - 1] >> (64 - s);
        }
        for (const auto& [q, r] : cross) {
            if (w < q) continue;
            if (r == 0) {
                n |= pwords[w - q];
            } else {
                n |= pwords[w - q] << r;
                if (w > q) n |= pwords[w - q - 1] >> (64 - r);
            }
        }
        // Bits below f are final; P bits among them propagate to higher bits.
        for (uint64_t f = smin; f < 64; f += smin) {
            const uint64_t known_p = ~n & low_mask(f);
            for (uint32_t s : inword) n |= known_p << s;
        }
        nwords[w] = n;
        pwords[w] = ~n;
    }
    if (length & 63) nwords.back() &= low_mask(length & 63);
    return OutcomeSequence(set, length, std::move(nwords));
}

GrundySequence grundy_sequence(const SubtractionSet& set, uint64_t length) {
    if (length == 0) {
        throw std::invalid_argument("sequence length must be positive");
    }
    if (set.size() > 0xFFFF) {
        throw std::invalid_argument("subtraction set too large for 16-bit Grundy values");
    }
    std::vector<uint16_t> values(length);
    // stamp[g] == p records that value g is reachable from position p, so the
    // scratch table never needs clearing between positions.
    std::vector<uint64_t> stamp(set.size() + 1, ~uint64_t{0});
    for (uint64_t p = 0; p < length; ++p) {
        for (uint32_t s : set.elements()) {
            if (s > p) break;
            stamp[values[p - s]] = p;
        }
        uint16_t g = 0;
        while (stamp[g] == p) ++g;
        values[p] = g;
    }
    return GrundySequence{set, std::move(values)};
}

std::optional<uint32_t> best_move(const SubtractionSet& set, uint64_t position) {
    const OutcomeSequence outcome = outcome_sequence(set, position + 1);
    if (!outcome[position]) return std::nullopt;
    for (uint32_t s : set.elements()) {
        if (s > position) break;
        if (!outcome[position - s]) return s;
    }
    throw std::logic_error("N-position without a winning move; recurrence violated");
}

}  // namespace subperiod
