#include <doctest.h>

#include <random>

#include "recur/adwin.hpp"
#include "recur/block_seq.hpp"
#include "recur/drift_detector.hpp"

using namespace recur::drift;

namespace {

std::vector<DetectorConfig> both() { return {{DetectorKind::kAdwin, 0.01}, {DetectorKind::kBlockSeq, 0.01}}; }

// First detection at or after `from`, or -1.
long first_detection(DriftDetector& d, std::mt19937_64& rng, double p0, double p1, long change, long length,
                     long from) {
    std::bernoulli_distribution before(p0), after(p1);
    for (long i = 0; i < length; ++i) {
        const bool e = i < change ? before(rng) : after(rng);
        if (d.add(e) && i >= from) return i;
    }
    return -1;
}

}  // namespace

TEST_CASE("accuracy is one minus the windowed error rate") {
    for (const auto& cfg : both()) {
        auto d = make_detector(cfg);
        CHECK(d->accuracy() == 0.5);
        for (int i = 0; i < 4; ++i) d->add(false);
        CHECK(d->accuracy() == doctest::Approx(1.0));
        d->reset();
        for (int i = 0; i < 4; ++i) d->add(true);
        CHECK(d->accuracy() == doctest::Approx(0.0));
        d->reset();
        for (int i = 0; i < 4; ++i) d->add(i % 2 == 1);
        CHECK(d->accuracy() == doctest::Approx(0.5));
        CHECK(d->width() == 4);
    }
}

TEST_CASE("constant streams never signal") {
    for (const auto& cfg : both()) {
        for (bool value : {false, true}) {
            auto d = make_detector(cfg);
            for (int i = 0; i < 20000; ++i) REQUIRE_FALSE(d->add(value));
            CHECK(d->detections() == 0);
        }
    }
}

TEST_CASE("accuracy tracks the window over random outcomes") {
    for (const auto& cfg : both()) {
        auto d = make_detector(cfg);
        std::mt19937_64 rng(5);
        std::bernoulli_distribution b(0.3);
        for (int i = 0; i < 3000; ++i) d->add(b(rng));
        CHECK(d->accuracy() == doctest::Approx(0.7).epsilon(0.05));
    }
}

TEST_CASE("an abrupt error increase is detected quickly") {
    for (const auto& cfg : both()) {
        int detected = 0;
        for (int seed = 0; seed < 20; ++seed) {
            auto d = make_detector(cfg);
            std::mt19937_64 rng(seed);
            const long at = first_detection(*d, rng, 0.1, 0.5, 5000, 7000, 5000);
            detected += at >= 5000 && at < 6000;
        }
        CHECK(detected >= 19);
    }
}

TEST_CASE("after a drift the estimate reflects the new regime") {
    for (const auto& cfg : both()) {
        auto d = make_detector(cfg);
        std::mt19937_64 rng(8);
        std::bernoulli_distribution low(0.05), high(0.6);
        for (int i = 0; i < 5000; ++i) d->add(low(rng));
        for (int i = 0; i < 2000; ++i) d->add(high(rng));
        CHECK(d->detections() >= 1);
        CHECK(d->accuracy() < 0.6);
    }
}

TEST_CASE("block detector bound") {
    BlockSeq b(0.01);
    const double l = std::log(400.0);
    const double m = 1.0 / 1000.0 + 1.0 / 200.0;
    CHECK(b.threshold(1000, 200, 0.2) == doctest::Approx(std::sqrt(2 * 0.16 * m * l) + 2.0 / 3.0 * m * l));
    CHECK_THROWS(BlockSeq(0.0));
    CHECK_THROWS(BlockSeq(0.01, 200, 100));
}

TEST_CASE("block detector keeps the triggering block") {
    BlockSeq b(0.01, 200, 5000);
    for (int i = 0; i < 2000; ++i) b.add(false);
    bool fired = false;
    for (int i = 0; i < 200; ++i) fired = b.add(true) || fired;
    CHECK(fired);
    CHECK(b.width() == 200);
    CHECK(b.accuracy() == doctest::Approx(0.0));
}

TEST_CASE("block detector reservoir is bounded") {
    BlockSeq b(0.01, 200, 5000);
    for (int i = 0; i < 50000; ++i) b.add(false);
    CHECK(b.width() <= 5000 + 200);
}

TEST_CASE("clones are independent") {
    for (const auto& cfg : both()) {
        auto d = make_detector(cfg);
        for (int i = 0; i < 100; ++i) d->add(i % 4 == 0);
        auto c = d->clone();
        CHECK(c->accuracy() == d->accuracy());
        for (int i = 0; i < 100; ++i) c->add(true);
        CHECK(c->accuracy() != d->accuracy());
    }
}

TEST_CASE("detector kinds parse and print") {
    CHECK(parse_detector_kind("adwin") == DetectorKind::kAdwin);
    CHECK(parse_detector_kind("block-seq") == DetectorKind::kBlockSeq);
    CHECK(to_string(DetectorKind::kBlockSeq) == "block-seq");
    CHECK_THROWS(parse_detector_kind("ddm"));
    CHECK(make_detector({DetectorKind::kAdwin, 0.01})->name() == "adwin");
}

TEST_CASE("larger steps are detected no later on average") {
    for (const auto& cfg : both()) {
        CAPTURE(to_string(cfg.kind));
        double delay_small = 0.0, delay_large = 0.0;
        for (int seed = 0; seed < 100; ++seed) {
            for (double p1 : {0.3, 0.5}) {
                auto d = make_detector(cfg);
                std::mt19937_64 rng(500 + seed);
                const long at = first_detection(*d, rng, 0.1, p1, 3000, 8000, 3000);
                const double delay = at < 0 ? 5000.0 : static_cast<double>(at - 3000);
                (p1 < 0.4 ? delay_small : delay_large) += delay / 100.0;
            }
        }
        CHECK(delay_large <= delay_small);
    }
}
