#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "subperiod/game_core.hpp"
#include "subperiod/periodicity.hpp"

using subperiod::HorizonCapError;
using subperiod::HorizonPolicy;
using subperiod::OutcomeSequence;
using subperiod::PeriodicityCertificate;
using subperiod::PeriodReport;
using subperiod::SubtractionSet;

namespace {

OutcomeSequence outcome(const std::vector<uint32_t>& elements, uint64_t length) {
    return subperiod::outcome_sequence(SubtractionSet(elements), length);
}

}  // namespace

TEST_CASE("last_shift_mismatch: packed overload agrees with the generic scan") {
    std::mt19937 rng(314);
    std::uniform_int_distribution<std::size_t> size_dist(1, 5);
    std::uniform_int_distribution<uint64_t> length_dist(40, 400);
    for (int trial = 0; trial < 60; ++trial) {
        const SubtractionSet set(oracles::random_set(rng, size_dist(rng), 30));
        const OutcomeSequence seq = outcome(set.elements(), length_dist(rng));
        for (uint64_t shift = 1; shift <= seq.size() + 2; ++shift) {
            const auto packed = subperiod::last_shift_mismatch(seq, shift);
            const auto generic = subperiod::last_shift_mismatch<OutcomeSequence>(seq, shift);
            REQUIRE(packed == generic);
        }
    }
}

TEST_CASE("detect_period: hand-checked certificates") {
    const auto parity = subperiod::detect_period(outcome({1}, 50), 1);
    REQUIRE(parity.has_value());
    CHECK(parity->preperiod == 0);
    CHECK(parity->period == 2);
    CHECK(parity->window == 1);
    CHECK(parity->horizon == 50);

    const auto fig = subperiod::detect_period(outcome({1, 3, 7, 8}, 100), 8);
    REQUIRE(fig.has_value());
    CHECK(fig->preperiod == 0);
    CHECK(fig->period == 15);

    const auto late = subperiod::detect_period(outcome({1, 6, 9}, 200), 9);
    REQUIRE(late.has_value());
    CHECK(late->preperiod == 10);
    CHECK(late->period == 5);

    const auto t1 = subperiod::detect_period(outcome({1, 2, 9}, 100), 9);
    REQUIRE(t1.has_value());
    CHECK(t1->preperiod == 0);
    CHECK(t1->period == 10);
}

TEST_CASE("detect_period input validation") {
    const OutcomeSequence seq = outcome({1, 2}, 10);
    CHECK_THROWS_AS(subperiod::detect_period(seq, 0), std::invalid_argument);
    CHECK_THROWS_AS(subperiod::detect_period(outcome({1, 2}, 2), 2), std::invalid_argument);
}

TEST_CASE("detect_period returns nothing when the horizon is too small") {
    // {5,11,16} admits no certificate within 128 positions.
    CHECK(!subperiod::detect_period(outcome({5, 11, 16}, 128), 16).has_value());
}

TEST_CASE("detect_period agrees with the all-pairs oracle on outcome sequences") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<std::size_t> size_dist(1, 5);
    for (int trial = 0; trial < 80; ++trial) {
        const SubtractionSet set(oracles::random_set(rng, size_dist(rng), 24));
        const uint64_t window = set.max();
        const OutcomeSequence seq = outcome(set.elements(), 4 * window + 160);
        const auto fast = subperiod::detect_period(seq, window);
        const auto slow = oracles::window_scan_period(seq, window);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            REQUIRE(fast->preperiod == slow->first);
            REQUIRE(fast->period == slow->second);
        }
    }
}

TEST_CASE("detect_period agrees with the all-pairs oracle on Grundy sequences") {
    std::mt19937 rng(1618);
    std::uniform_int_distribution<std::size_t> size_dist(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const SubtractionSet set(oracles::random_set(rng, size_dist(rng), 16));
        const uint64_t window = set.max();
        const auto grundy = subperiod::grundy_sequence(set, 6 * window + 200);
        const auto fast = subperiod::detect_period(grundy, window);
        const auto slow = oracles::window_scan_period(grundy, window);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            REQUIRE(fast->preperiod == slow->first);
            REQUIRE(fast->period == slow->second);
        }
    }
}

TEST_CASE("verify_certificate checks exactly the claimed window") {
    const OutcomeSequence seq = outcome({1, 3, 7, 8}, 100);
    CHECK(subperiod::verify_certificate(seq, {0, 15, 8, 100}));
    CHECK(!subperiod::verify_certificate(seq, {0, 14, 8, 100}));
    CHECK(subperiod::verify_certificate(outcome({1}, 50), {0, 2, 1, 50}));

    CHECK_THROWS_AS(subperiod::verify_certificate(seq, {0, 0, 8, 100}), std::invalid_argument);
    CHECK_THROWS_AS(subperiod::verify_certificate(seq, {0, 15, 0, 100}), std::invalid_argument);
    CHECK_THROWS_AS(subperiod::verify_certificate(outcome({1, 3, 7, 8}, 20), {0, 15, 8, 20}),
                    std::invalid_argument);
}

TEST_CASE("find_period: hand-checked reports") {
    const PeriodReport parity = subperiod::find_period(SubtractionSet({1}));
    CHECK(parity.certificate.preperiod == 0);
    CHECK(parity.certificate.period == 2);
    CHECK(parity.block == "01");
    CHECK(subperiod::format_linear_period(parity) == "(01)");

    const PeriodReport fig = subperiod::find_period(SubtractionSet({1, 3, 7, 8}));
    CHECK(fig.certificate.preperiod == 0);
    CHECK(fig.certificate.period == 15);
    CHECK(fig.certificate.horizon == 96);
    CHECK(fig.block == "010101011111111");

    struct Expected {
        std::vector<uint32_t> elements;
        uint64_t preperiod;
        uint64_t period;
        std::string block;
    };
    const Expected table[] = {
        {{1, 2, 3}, 0, 4, "0111"},
        {{1, 2, 6}, 0, 7, "0110111"},
        {{1, 4, 5}, 0, 8, "01011111"},
        {{1, 2, 9}, 0, 10, "0110110111"},
        {{1, 2, 12}, 0, 13, "0110110110111"},
        {{1, 3, 8}, 0, 11, "01010101111"},
    };
    for (const Expected& row : table) {
        const PeriodReport report = subperiod::find_period(SubtractionSet(row.elements));
        CHECK(report.certificate.preperiod == row.preperiod);
        CHECK(report.certificate.period == row.period);
        CHECK(report.block == row.block);
        CHECK(report.prefix == "");
    }
}

TEST_CASE("find_period: nonzero preperiods") {
    struct Expected {
        std::vector<uint32_t> elements;
        uint64_t preperiod;
        uint64_t period;
        std::string prefix;
        std::string block;
        uint64_t horizon;
    };
    const Expected rows[] = {
        {{1, 4, 10}, 11, 11, "01011010111", "11011010110", 104},
        {{1, 4, 15}, 16, 16, "0101101011010111", "1101101011010110", 124},
        {{1, 4, 20}, 21, 21, "010110101101011010111", "110110101101011010110", 144},
        {{1, 6, 9}, 10, 5, "0101011011", "11010", 100},
        {{1, 6, 14}, 37, 5, "0101011010101111111011010101101011011", "11010", 120},
        {{1, 6, 16}, 17, 17, "01010110101011011", "11010110101011010", 128},
        {{2, 5, 11}, 12, 13, "001101100111", "1101101100110", 108},
    };
    for (const Expected& row : rows) {
        const PeriodReport report = subperiod::find_period(SubtractionSet(row.elements));
        CHECK(report.certificate.preperiod == row.preperiod);
        CHECK(report.certificate.period == row.period);
        CHECK(report.prefix == row.prefix);
        CHECK(report.block == row.block);
        CHECK(report.certificate.horizon == row.horizon);
        CHECK(subperiod::format_linear_period(report) == row.prefix + "(" + row.block + ")");
    }
}

TEST_CASE("find_period deepens the horizon until a certificate fits") {
    const PeriodReport report = subperiod::find_period(SubtractionSet({5, 11, 16}));
    CHECK(report.certificate.preperiod == 0);
    CHECK(report.certificate.period == 115);
    CHECK(report.certificate.horizon == 256);  // one doubling past the initial 128

    // The report must agree with the all-pairs oracle at the final horizon.
    const OutcomeSequence seq = outcome({5, 11, 16}, report.certificate.horizon);
    const auto slow = oracles::window_scan_period(seq, 16);
    REQUIRE(slow.has_value());
    CHECK(slow->first == report.certificate.preperiod);
    CHECK(slow->second == report.certificate.period);
}

TEST_CASE("find_period reports cap exhaustion explicitly") {
    try {
        subperiod::find_period(SubtractionSet({5, 11, 16}), HorizonPolicy{128});
        FAIL("expected HorizonCapError");
    } catch (const HorizonCapError& error) {
        CHECK(error.cap() == 128);
        CHECK(std::string(error.what()).find("128") != std::string::npos);
        CHECK(std::string(error.what()).find("5,11,16") != std::string::npos);
    }

    // A cap below the initial horizon is rejected up front.
    try {
        subperiod::find_period(SubtractionSet({1, 3, 7, 8}), HorizonPolicy{10});
        FAIL("expected HorizonCapError");
    } catch (const HorizonCapError& error) {
        CHECK(error.cap() == 10);
    }
}

TEST_CASE("certificates extend: recomputing further never breaks the period") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<std::size_t> size_dist(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
        const SubtractionSet set(oracles::random_set(rng, size_dist(rng), 20));
        const PeriodReport report = subperiod::find_period(set);
        const PeriodicityCertificate& cert = report.certificate;
        const uint64_t extended = 3 * (cert.preperiod + cert.period + cert.window);
        const OutcomeSequence seq = subperiod::outcome_sequence(set, extended);
        for (uint64_t q = cert.preperiod; q + cert.period < extended; ++q) {
            REQUIRE(seq[q + cert.period] == seq[q]);
        }
    }
}

TEST_CASE("returned periods and preperiods are minimal") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::size_t> size_dist(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const SubtractionSet set(oracles::random_set(rng, size_dist(rng), 18));
        const PeriodReport report = subperiod::find_period(set);
        const PeriodicityCertificate& cert = report.certificate;
        const OutcomeSequence seq = subperiod::outcome_sequence(set, cert.horizon);

        // No smaller period admits any certificate within the same horizon.
        for (uint64_t p = 1; p < cert.period; ++p) {
            const auto mismatch = subperiod::last_shift_mismatch(seq, p);
            const uint64_t l = mismatch ? *mismatch + 1 : 0;
            REQUIRE(l + p + cert.window > cert.horizon);
        }
        // The preperiod cannot shrink: position preperiod-1 genuinely differs.
        if (cert.preperiod > 0) {
            REQUIRE(seq[cert.preperiod - 1 + cert.period] != seq[cert.preperiod - 1]);
        }
    }
}

TEST_CASE("outcome period divides grundy period") {
    std::mt19937 rng(888);
    std::uniform_int_distribution<std::size_t> size_dist(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
        const SubtractionSet set(oracles::random_set(rng, size_dist(rng), 14));
        const uint64_t window = set.max();
        uint64_t horizon = 4 * window + 64;
        std::optional<PeriodicityCertificate> ocert;
        std::optional<PeriodicityCertificate> gcert;
        while (true) {
            ocert = subperiod::detect_period(subperiod::outcome_sequence(set, horizon), window);
            gcert = subperiod::detect_period(subperiod::grundy_sequence(set, horizon), window);
            if (ocert && gcert) break;
            horizon *= 2;
            REQUIRE(horizon <= (uint64_t{1} << 22));
        }
        REQUIRE(gcert->period % ocert->period == 0);
    }
}
