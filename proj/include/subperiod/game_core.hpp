#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subperiod/subtraction_set.hpp"

namespace subperiod {

/// Least non-negative integer absent from `values` (duplicates tolerated).
uint32_t mex(std::span<const uint32_t> values);

class OutcomeSequence;
OutcomeSequence outcome_sequence(const SubtractionSet& set, uint64_t length);

/// P/N classification per heap size, bit-packed LSB-first. Bit 1 = N-position
/// (mover wins), bit 0 = P-position (mover loses). Position 0 is a P-position
/// under normal play. Bits beyond size() in the last word are zero.
class OutcomeSequence {
public:
    bool operator[](uint64_t p) const {
        return (words_[p >> 6] >> (p & 63)) & 1;
    }
    uint64_t size() const { return length_; }
    const SubtractionSet& set() const { return set_; }
    std::span<const uint64_t> words() const { return words_; }

    /// Positions [begin, end) as a '0'/'1' string.
    std::string to_digit_string(uint64_t begin, uint64_t end) const;

private:
    OutcomeSequence(SubtractionSet set, uint64_t length, std::vector<uint64_t> words)
        : set_(std::move(set)), length_(length), words_(std::move(words)) {}
    friend OutcomeSequence outcome_sequence(const SubtractionSet&, uint64_t);

    SubtractionSet set_;
    uint64_t length_;
    std::vector<uint64_t> words_;
};

/// Sprague-Grundy values per heap size. values[p] = mex over the values
/// reachable by one move; always <= |S|.
struct GrundySequence {
    SubtractionSet set;
    std::vector<uint16_t> values;

    uint16_t operator[](uint64_t p) const { return values[p]; }
    uint64_t size() const { return values.size(); }
};

GrundySequence grundy_sequence(const SubtractionSet& set, uint64_t length);

/// Smallest winning move from `position`, or nothing for a P-position.
std::optional<uint32_t> best_move(const SubtractionSet& set, uint64_t position);

}  // namespace subperiod
