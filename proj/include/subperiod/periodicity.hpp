#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "subperiod/game_core.hpp"

namespace subperiod {

/// Claim that seq[q + period] = seq[q] for all q >= preperiod, certified by
/// checking one window of `window` consecutive positions. For a sequence
/// generated by a recurrence whose span is at most `window` (here max(S)),
/// the window check implies the claim for every later position by induction.
struct PeriodicityCertificate {
    uint64_t preperiod = 0;  // first certified periodic position
    uint64_t period = 0;
    uint64_t window = 0;     // verified window length, = max(S)
    uint64_t horizon = 0;    // sequence length available when certified
};

inline constexpr uint64_t kDefaultHorizonCap = uint64_t{1} << 20;

struct HorizonPolicy {
    uint64_t cap = kDefaultHorizonCap;
};

class HorizonCapError : public std::runtime_error {
public:
    HorizonCapError(const SubtractionSet& set, uint64_t cap)
        : std::runtime_error("no periodicity certificate for {" + set.to_string() +
                             "} within horizon cap " + std::to_string(cap)),
          cap_(cap) {}
    HorizonCapError(const SubtractionSet& set, uint64_t cap, uint64_t initial)
        : std::runtime_error("horizon cap " + std::to_string(cap) +
                             " is below the initial horizon " + std::to_string(initial) +
                             " for {" + set.to_string() + "}"),
          cap_(cap) {}
    uint64_t cap() const { return cap_; }

private:
    uint64_t cap_;
};

/// Largest q < size()-shift with seq[q+shift] != seq[q], scanning from the
/// tail so the first hit is the answer.
template <typename Seq>
std::optional<uint64_t> last_shift_mismatch(const Seq& seq, uint64_t shift) {
    if (shift >= seq.size()) return std::nullopt;
    for (uint64_t q = seq.size() - shift; q-- > 0;) {
        if (seq[q + shift] != seq[q]) return q;
    }
    return std::nullopt;
}

/// Word-parallel overload for packed outcome bits.
std::optional<uint64_t> last_shift_mismatch(const OutcomeSequence& seq, uint64_t shift);

/// Minimal period p, then minimal preperiod l for that p, such that the
/// window condition holds and l + p + window <= length. Nothing if the
/// horizon is too small. `window` must equal max(S) of the sequence's set
/// for the certificate to imply eventual periodicity.
template <typename Seq>
std::optional<PeriodicityCertificate> detect_period(const Seq& seq, uint64_t window) {
    const uint64_t n = seq.size();
    if (window == 0) throw std::invalid_argument("detect_period: window must be positive");
    if (n < window + 1) throw std::invalid_argument("detect_period: sequence shorter than window + 1");
    for (uint64_t p = 1; p + window <= n; ++p) {
        const auto mismatch = last_shift_mismatch(seq, p);
        const uint64_t l = mismatch ? *mismatch + 1 : 0;
        if (l + p + window <= n) return PeriodicityCertificate{l, p, window, n};
    }
    return std::nullopt;
}

/// Exact window check. Throws if the sequence is too short for the claim
/// (distinct from returning false).
template <typename Seq>
bool verify_certificate(const Seq& seq, const PeriodicityCertificate& cert) {
    if (cert.period == 0 || cert.window == 0)
        throw std::invalid_argument("verify_certificate: period and window must be positive");
    if (cert.preperiod + cert.period + cert.window > seq.size())
        throw std::invalid_argument("verify_certificate: sequence too short for the claimed certificate");
    for (uint64_t q = cert.preperiod; q < cert.preperiod + cert.window; ++q) {
        if (seq[q + cert.period] != seq[q]) return false;
    }
    return true;
}

struct PeriodReport {
    SubtractionSet set;
    PeriodicityCertificate certificate;
    std::string prefix;  // outcome symbols 0..preperiod-1
    std::string block;   // the `period` periodic symbols
};

/// "PREFIX(BLOCK)"; pure periodicity renders as "(BLOCK)".
std::string format_linear_period(const PeriodReport& report);

/// Computes the outcome sequence under iterative deepening (start at
/// 4*max(S)+64, double up to policy.cap) and returns the minimal certified
/// period. Throws HorizonCapError when the cap is exhausted.
PeriodReport find_period(const SubtractionSet& set, const HorizonPolicy& policy = {});

}  // namespace subperiod
