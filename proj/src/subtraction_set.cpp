#include "subperiod/subtraction_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace subperiod {

SubtractionSet::SubtractionSet(std::vector<uint32_t> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw std::invalid_argument("subtraction set must be nonempty");
    }
    std::sort(elements_.begin(), elements_.end());
    if (elements_.front() == 0) {
        throw std::invalid_argument("subtraction set elements must be positive");
    }
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
        throw std::invalid_argument("duplicate element in subtraction set");
    }
}

SubtractionSet SubtractionSet::parse(const std::string& text) {
    std::vector<uint32_t> elements;
    const char* cursor = text.data();
    const char* end = text.data() + text.size();
    while (true) {
        while (cursor != end && *cursor == ' ') ++cursor;
        uint32_t value = 0;
        const auto [next, ec] = std::from_chars(cursor, end, value);
        if (ec != std::errc{} || next == cursor) {
            throw std::invalid_argument("invalid subtraction set '" + text +
                                        "': expected a positive integer");
        }
        elements.push_back(value);
        cursor = next;
        while (cursor != end && *cursor == ' ') ++cursor;
        if (cursor == end) break;
        if (*cursor != ',') {
            throw std::invalid_argument("invalid subtraction set '" + text +
                                        "': expected ',' between elements");
        }
        ++cursor;
    }
    return SubtractionSet(std::move(elements));
}

bool SubtractionSet::contains(uint32_t s) const {
    return std::binary_search(elements_.begin(), elements_.end(), s);
}

std::string SubtractionSet::to_string() const {
    std::string out;
    for (uint32_t s : elements_) {
        if (!out.empty()) out += ',';
        out += std::to_string(s);
    }
    return out;
}

SubtractionSet remove_element(const SubtractionSet& set, uint32_t s) {
    if (!set.contains(s)) {
        throw std::invalid_argument("element " + std::to_string(s) + " is not in {" +
                                    set.to_string() + "}");
    }
    if (set.size() == 1) {
        throw std::invalid_argument("removing " + std::to_string(s) +
                                    " would leave an empty subtraction set");
    }
    std::vector<uint32_t> rest;
    rest.reserve(set.size() - 1);
    for (uint32_t e : set.elements()) {
        if (e != s) rest.push_back(e);
    }
    return SubtractionSet(std::move(rest));
}

}  // namespace subperiod
