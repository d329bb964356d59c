#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subperiod/family.hpp"
#include "subperiod/periodicity.hpp"

namespace subperiod {

enum class Family { T1, T2, T3, T4, Eq1 };

/// Closed-form period prediction for one instantiated game. All families
/// predict pure periodicity (preperiod 0).
struct FormulaPrediction {
    Family family;
    SubtractionSet set;
    std::string parameter;  // e.g. "k=7", "s1=2 s2=6", "s=2 selectors=1"
    uint64_t predicted_period = 0;
    uint64_t predicted_preperiod = 0;
};

/// {1,2,k}, k >= 3: period k+1 when 3 | k, else 3.
FormulaPrediction predict_t1(uint32_t k);
/// {1,3,k}, k >= 4: period k+3 when k is even, else 2 (table-consistent form).
FormulaPrediction predict_t2(uint32_t k);
/// {1,k,k+1}, k >= 2: period 2k+1 when k is odd, else 2k (table-consistent form).
FormulaPrediction predict_t3(uint32_t k);
/// {s} plus (i+1)s+i for each selected i: period 2s claimed regardless of
/// selection. The harness adjudicates; many selections refute the claim.
FormulaPrediction predict_t4(uint32_t s, const std::vector<bool>& selectors);
/// {s1,s2}, 0 < s1 < s2: period 2*s1 when s2/s1 is an odd integer, else
/// s1+s2. Rule confirmed by exhaustive brute force over s2 <= 60.
FormulaPrediction predict_eq1(uint32_t s1, uint32_t s2);

/// Alternate condition forms with the parities swapped (T2/T3) or with a
/// divisibility-by-3 test on s2 (EQ1). Kept so the harness can demonstrate
/// that they fail against computed ground truth.
FormulaPrediction predict_t2_alt(uint32_t k);
FormulaPrediction predict_t3_alt(uint32_t k);
FormulaPrediction predict_eq1_alt(uint32_t s1, uint32_t s2);

enum class VerifyStatus { Match, PeriodMismatch, PreperiodMismatch, Undefined };
const char* to_string(VerifyStatus status);

struct VerificationRecord {
    FormulaPrediction prediction;
    std::optional<PeriodReport> computed;  // empty when Undefined
    VerifyStatus status = VerifyStatus::Undefined;
    std::string note;  // cap message when Undefined
};

/// Compares one prediction against find_period ground truth. Horizon-cap
/// exhaustion yields an Undefined record instead of propagating.
VerificationRecord verify_prediction(const FormulaPrediction& prediction,
                                     const HorizonPolicy& policy = {});

std::vector<VerificationRecord> verify_t1(uint32_t k_lo, uint32_t k_hi,
                                          const HorizonPolicy& policy = {});
std::vector<VerificationRecord> verify_t2(uint32_t k_lo, uint32_t k_hi,
                                          const HorizonPolicy& policy = {});
std::vector<VerificationRecord> verify_t3(uint32_t k_lo, uint32_t k_hi,
                                          const HorizonPolicy& policy = {});
std::vector<VerificationRecord> verify_t4(uint32_t s_lo, uint32_t s_hi,
                                          const std::vector<bool>& selectors,
                                          const HorizonPolicy& policy = {});
std::vector<VerificationRecord> verify_eq1(uint32_t s1_lo, uint32_t s1_hi,
                                           uint32_t s2_lo, uint32_t s2_hi,
                                           const HorizonPolicy& policy = {});

/// Every s in S whose removal leaves the outcome sequence unchanged over the
/// certified horizons of both games. Requires |S| >= 2.
std::vector<uint32_t> redundant_elements(const SubtractionSet& set,
                                         const HorizonPolicy& policy = {});

enum class ScanStatus { Ok, SkippedInvalid, CapExceeded };
const char* to_string(ScanStatus status);

struct ScanRecord {
    uint32_t k = 0;
    std::vector<uint32_t> elements;  // as instantiated, before canonicalization
    std::optional<PeriodReport> report;
    ScanStatus status = ScanStatus::Ok;
    std::string note;
};

/// Instantiates the family for each k in [lo, hi] and finds each period.
/// Invalid instantiations and per-instance cap failures become records, not
/// errors.
std::vector<ScanRecord> scan_family(const FamilyExpression& family, uint32_t lo, uint32_t hi,
                                    const HorizonPolicy& policy = {});

}  // namespace subperiod
