#include "subperiod/conjectures.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace subperiod {
namespace {

std::string k_param(uint32_t k) {
    return "k=" + std::to_string(k);
}

std::string selector_mask(const std::vector<bool>& selectors) {
    if (selectors.empty()) return "-";
    std::string mask;
    mask.reserve(selectors.size());
    for (bool bit : selectors) mask += bit ? '1' : '0';
    return mask;
}

}  // namespace

FormulaPrediction predict_t1(uint32_t k) {
    if (k < 3) throw std::invalid_argument("predict_t1: k must be at least 3");
    const uint64_t period = (k % 3 == 0) ? uint64_t{k} + 1 : 3;
    return {Family::T1, SubtractionSet({1, 2, k}), k_param(k), period, 0};
}

FormulaPrediction predict_t2(uint32_t k) {
    if (k < 4) throw std::invalid_argument("predict_t2: k must be at least 4");
    const uint64_t period = (k % 2 == 0) ? uint64_t{k} + 3 : 2;
    return {Family::T2, SubtractionSet({1, 3, k}), k_param(k), period, 0};
}

FormulaPrediction predict_t2_alt(uint32_t k) {
    if (k < 4) throw std::invalid_argument("predict_t2_alt: k must be at least 4");
    const uint64_t period = (k % 2 == 1) ? uint64_t{k} + 3 : 2;
    return {Family::T2, SubtractionSet({1, 3, k}), k_param(k), period, 0};
}

FormulaPrediction predict_t3(uint32_t k) {
    if (k < 2) throw std::invalid_argument("predict_t3: k must be at least 2");
    const uint64_t period = (k % 2 == 1) ? uint64_t{2} * k + 1 : uint64_t{2} * k;
    return {Family::T3, SubtractionSet({1, k, k + 1}), k_param(k), period, 0};
}

FormulaPrediction predict_t3_alt(uint32_t k) {
    if (k < 2) throw std::invalid_argument("predict_t3_alt: k must be at least 2");
    const uint64_t period = (k % 2 == 0) ? uint64_t{2} * k + 1 : uint64_t{2} * k;
    return {Family::T3, SubtractionSet({1, k, k + 1}), k_param(k), period, 0};
}

FormulaPrediction predict_t4(uint32_t s, const std::vector<bool>& selectors) {
    if (s < 1) throw std::invalid_argument("predict_t4: s must be positive");
    std::vector<uint32_t> elements{s};
    for (std::size_t i = 1; i <= selectors.size(); ++i) {
        if (!selectors[i - 1]) continue;
        const uint64_t element = uint64_t{i + 1} * s + i;
        if (element > std::numeric_limits<uint32_t>::max()) {
            throw std::invalid_argument("predict_t4: element exceeds the 32-bit move-size limit");
        }
        elements.push_back(static_cast<uint32_t>(element));
    }
    return {Family::T4, SubtractionSet(std::move(elements)),
            "s=" + std::to_string(s) + " selectors=" + selector_mask(selectors),
            uint64_t{2} * s, 0};
}

FormulaPrediction predict_eq1(uint32_t s1, uint32_t s2) {
    if (s1 < 1 || s2 <= s1) throw std::invalid_argument("predict_eq1: need 0 < s1 < s2");
    const bool odd_multiple = (s2 % s1 == 0) && ((s2 / s1) % 2 == 1);
    const uint64_t period = odd_multiple ? uint64_t{2} * s1 : uint64_t{s1} + s2;
    return {Family::Eq1, SubtractionSet({s1, s2}),
            "s1=" + std::to_string(s1) + " s2=" + std::to_string(s2), period, 0};
}

FormulaPrediction predict_eq1_alt(uint32_t s1, uint32_t s2) {
    if (s1 < 1 || s2 <= s1) throw std::invalid_argument("predict_eq1_alt: need 0 < s1 < s2");
    const uint64_t period = (s2 % 3 == 0) ? uint64_t{2} * s1 : uint64_t{s1} + s2;
    return {Family::Eq1, SubtractionSet({s1, s2}),
            "s1=" + std::to_string(s1) + " s2=" + std::to_string(s2), period, 0};
}

const char* to_string(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::Match: return "match";
        case VerifyStatus::PeriodMismatch: return "period-mismatch";
        case VerifyStatus::PreperiodMismatch: return "preperiod-mismatch";
        case VerifyStatus::Undefined: return "undefined";
    }
    return "unknown";
}

const char* to_string(ScanStatus status) {
    switch (status) {
        case ScanStatus::Ok: return "ok";
        case ScanStatus::SkippedInvalid: return "skipped-invalid";
        case ScanStatus::CapExceeded: return "cap-exceeded";
    }
    return "unknown";
}

VerificationRecord verify_prediction(const FormulaPrediction& prediction,
                                     const HorizonPolicy& policy) {
    try {
        PeriodReport report = find_period(prediction.set, policy);
        VerifyStatus status = VerifyStatus::Match;
        if (report.certificate.period != prediction.predicted_period) {
            status = VerifyStatus::PeriodMismatch;
        } else if (report.certificate.preperiod != prediction.predicted_preperiod) {
            status = VerifyStatus::PreperiodMismatch;
        }
        return {prediction, std::move(report), status, ""};
    } catch (const HorizonCapError& error) {
        return {prediction, std::nullopt, VerifyStatus::Undefined, error.what()};
    }
}

namespace {

template <typename Predictor>
std::vector<VerificationRecord> verify_k_range(uint32_t k_lo, uint32_t k_hi, Predictor predict,
                                               const HorizonPolicy& policy) {
    if (k_lo > k_hi) throw std::invalid_argument("empty parameter range");
    std::vector<VerificationRecord> records;
    records.reserve(k_hi - k_lo + 1);
    for (uint32_t k = k_lo; k <= k_hi; ++k) {
        records.push_back(verify_prediction(predict(k), policy));
    }
    return records;
}

}  // namespace

std::vector<VerificationRecord> verify_t1(uint32_t k_lo, uint32_t k_hi,
                                          const HorizonPolicy& policy) {
    return verify_k_range(k_lo, k_hi, predict_t1, policy);
}

std::vector<VerificationRecord> verify_t2(uint32_t k_lo, uint32_t k_hi,
                                          const HorizonPolicy& policy) {
    return verify_k_range(k_lo, k_hi, predict_t2, policy);
}

std::vector<VerificationRecord> verify_t3(uint32_t k_lo, uint32_t k_hi,
                                          const HorizonPolicy& policy) {
    return verify_k_range(k_lo, k_hi, predict_t3, policy);
}

std::vector<VerificationRecord> verify_t4(uint32_t s_lo, uint32_t s_hi,
                                          const std::vector<bool>& selectors,
                                          const HorizonPolicy& policy) {
    if (s_lo > s_hi) throw std::invalid_argument("empty parameter range");
    std::vector<VerificationRecord> records;
    records.reserve(s_hi - s_lo + 1);
    for (uint32_t s = s_lo; s <= s_hi; ++s) {
        records.push_back(verify_prediction(predict_t4(s, selectors), policy));
    }
    return records;
}

std::vector<VerificationRecord> verify_eq1(uint32_t s1_lo, uint32_t s1_hi, uint32_t s2_lo,
                                           uint32_t s2_hi, const HorizonPolicy& policy) {
    if (s1_lo > s1_hi || s2_lo > s2_hi) throw std::invalid_argument("empty parameter range");
    std::vector<VerificationRecord> records;
    for (uint32_t s1 = s1_lo; s1 <= s1_hi; ++s1) {
        for (uint32_t s2 = std::max(s2_lo, s1 + 1); s2 <= s2_hi; ++s2) {
            records.push_back(verify_prediction(predict_eq1(s1, s2), policy));
        }
    }
    return records;
}

std::vector<uint32_t> redundant_elements(const SubtractionSet& set, const HorizonPolicy& policy) {
    if (set.size() < 2) {
        throw std::invalid_argument("redundancy analysis needs at least two elements");
    }
    const PeriodReport full = find_period(set, policy);
    const PeriodicityCertificate& fc = full.certificate;
    const uint64_t full_span = fc.preperiod + fc.period + fc.window;
    std::vector<uint32_t> redundant;
    for (uint32_t s : set.elements()) {
        const SubtractionSet reduced = remove_element(set, s);
        const PeriodicityCertificate rc = find_period(reduced, policy).certificate;
        const uint64_t horizon = std::max(full_span, rc.preperiod + rc.period + rc.window);
        const OutcomeSequence with = outcome_sequence(set, horizon);
        const OutcomeSequence without = outcome_sequence(reduced, horizon);
        if (std::ranges::equal(with.words(), without.words())) redundant.push_back(s);
    }
    return redundant;
}

std::vector<ScanRecord> scan_family(const FamilyExpression& family, uint32_t lo, uint32_t hi,
                                    const HorizonPolicy& policy) {
    if (lo > hi) throw std::invalid_argument("empty scan range");
    std::vector<ScanRecord> records;
    records.reserve(hi - lo + 1);
    for (uint32_t k = lo; k <= hi; ++k) {
        ScanRecord record;
        record.k = k;
        try {
            record.elements = family.instantiate(k);
            record.report = find_period(SubtractionSet(record.elements), policy);
        } catch (const HorizonCapError& error) {
            record.status = ScanStatus::CapExceeded;
            record.note = error.what();
        } catch (const std::overflow_error& error) {
            record.status = ScanStatus::SkippedInvalid;
            record.note = error.what();
        } catch (const std::invalid_argument& error) {
            record.status = ScanStatus::SkippedInvalid;
            record.note = error.what();
        }
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace subperiod
