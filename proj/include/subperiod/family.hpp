#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subperiod {

/// One element of a parameterized set family: scale*k + offset.
struct FamilyTerm {
    uint32_t scale = 0;
    uint32_t offset = 0;
};

class FamilyParseError : public std::runtime_error {
public:
    FamilyParseError(std::size_t position, const std::string& what)
        : std::runtime_error("family parse error at position " + std::to_string(position) +
                             ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Comma-separated linear forms over one parameter k. Each term is INT,
/// [INT]k, or [INT]k+INT, e.g. "1,4,5k" or "k,2k" or "3k+1,7".
class FamilyExpression {
public:
    static FamilyExpression parse(const std::string& text);

    /// Elements in term order, unvalidated (may contain zeros/duplicates).
    std::vector<uint32_t> instantiate(uint32_t k) const;

    const std::vector<FamilyTerm>& terms() const { return terms_; }
    std::string to_string() const;

private:
    std::vector<FamilyTerm> terms_;
};

}  // namespace subperiod
