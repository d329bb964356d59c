#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace subperiod {

/// Move set of a single-heap subtraction game, canonicalized to strictly
/// increasing positive move sizes. Duplicate input elements are rejected
/// rather than merged.
class SubtractionSet {
public:
    explicit SubtractionSet(std::vector<uint32_t> elements);

    /// Parses "1,3,7,8". Throws std::invalid_argument on malformed input.
    static SubtractionSet parse(const std::string& text);

    const std::vector<uint32_t>& elements() const { return elements_; }
    uint32_t min() const { return elements_.front(); }
    uint32_t max() const { return elements_.back(); }
    std::size_t size() const { return elements_.size(); }
    bool contains(uint32_t s) const;

    std::string to_string() const;  // "1,3,7,8"

    bool operator==(const SubtractionSet&) const = default;

private:
    std::vector<uint32_t> elements_;
};

/// Copy of `set` without element `s`. Throws if `s` is absent or if the
/// result would be empty.
SubtractionSet remove_element(const SubtractionSet& set, uint32_t s);

}  // namespace subperiod
