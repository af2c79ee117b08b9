#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sasyno/metrics.hpp"
#include "sasyno/rng.hpp"
#include "test_util.hpp"

using namespace sasyno;
using testutil::close_rel;

TEST_SUITE("metrics") {

TEST_CASE("confusion_matrix counts the four cells") {
    const std::vector<Label> truth = {"0", "0", "1", "1", "0", "1", "1", "0"};
    const std::vector<Label> pred  = {"0", "0", "0", "0", "1", "1", "1", "1"};
    const ConfusionMatrix cm = confusion_matrix(truth, pred, "0", "1");
    CHECK(cm.tp == 2);
    CHECK(cm.fn == 2);
    CHECK(cm.fp == 2);
    CHECK(cm.tn == 2);
    CHECK(cm.predicted_minority() == 4);
    CHECK(cm.predicted_majority() == 4);
    CHECK(cm.total() == 8);
}

TEST_CASE("perfect prediction has no off-diagonal mass") {
    const std::vector<Label> truth = {"0", "1", "1", "0"};
    const ConfusionMatrix cm = confusion_matrix(truth, truth, "0", "1");
    CHECK(cm.fn == 0);
    CHECK(cm.fp == 0);
}

TEST_CASE("an all-majority predictor") {
    std::vector<Label> truth(10, "0");
    truth.insert(truth.end(), 90, "1");
    const std::vector<Label> pred(100, "1");
    const ConfusionMatrix cm = confusion_matrix(truth, pred, "0", "1");
    CHECK(cm.tp == 0);
    CHECK(cm.fn == 10);
    CHECK(cm.fp == 0);
    CHECK(cm.tn == 90);
}

TEST_CASE("confusion_matrix error contracts") {
    CHECK_THROWS_AS(confusion_matrix({"0", "1"}, {"0"}, "0", "1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(confusion_matrix({"0", "2"}, {"0", "0"}, "0", "1"),
                         doctest::Contains("'2'"), std::invalid_argument);
}

TEST_CASE("single-argument overload derives the majority label") {
    const ConfusionMatrix cm = confusion_matrix({"m", "M", "M"}, {"m", "m", "M"}, "m");
    CHECK(cm.tp == 1);
    CHECK(cm.fp == 1);
    CHECK(cm.tn == 1);
    CHECK_THROWS_AS(confusion_matrix({"m", "a", "b"}, {"m", "a", "b"}, "m"),
                    std::invalid_argument);
}

TEST_CASE("metric formulas on the hand case") {
    const ConfusionMatrix cm{50, 50, 10, 90};
    const MetricSet m = compute_metrics(cm);
    CHECK(m.sn == 0.5);
    CHECK(m.sp == 0.9);
    CHECK(close_rel(m.gm, std::sqrt(0.45)));
    CHECK(m.fm == 0.625);
    CHECK(m.acc == 0.7);
    CHECK_FALSE(m.degenerate);
}

TEST_CASE("perfect predictor scores one everywhere") {
    const MetricSet m = compute_metrics(ConfusionMatrix{10, 0, 0, 90});
    CHECK(m.sn == 1.0);
    CHECK(m.sp == 1.0);
    CHECK(m.gm == 1.0);
    CHECK(m.fm == 1.0);
    CHECK(m.acc == 1.0);
}

TEST_CASE("zero true positives zero out SN, GM and FM") {
    const MetricSet m = compute_metrics(ConfusionMatrix{0, 10, 0, 90});
    CHECK(m.sn == 0.0);
    CHECK(m.gm == 0.0);
    CHECK(m.fm == 0.0);
    CHECK(m.sp == 1.0);
}

TEST_CASE("an absent truth class is an error naming it") {
    CHECK_THROWS_WITH_AS(compute_metrics(ConfusionMatrix{0, 0, 5, 5}),
                         doctest::Contains("minority"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(compute_metrics(ConfusionMatrix{5, 5, 0, 0}),
                         doctest::Contains("majority"), std::invalid_argument);
}

TEST_CASE("metric identities over random confusion matrices") {
    Rng rng(400);
    for (int trial = 0; trial < 2000; ++trial) {
        ConfusionMatrix cm;
        cm.tp = rng.below(1000);
        cm.fn = rng.below(1000);
        cm.fp = rng.below(1000);
        cm.tn = rng.below(1000);
        if (cm.actual_minority() == 0) cm.tp = 1;
        if (cm.actual_majority() == 0) cm.tn = 1;
        const MetricSet m = compute_metrics(cm);

        CHECK(close_rel(m.gm * m.gm, m.sn * m.sp, 1e-12));
        const double n0 = static_cast<double>(cm.actual_minority());
        const double n1 = static_cast<double>(cm.actual_majority());
        CHECK(close_rel(m.acc, (m.sn * n0 + m.sp * n1) / (n0 + n1), 1e-12));
        for (Measure meas : kAllMeasures) {
            CHECK(m[meas] >= 0.0);
            CHECK(m[meas] <= 1.0);
        }
    }
}

TEST_CASE("rank_table ranks distinct values in order") {
    const RankTable t = rank_table({"a", "b", "c"}, {"SN"}, {{0.9, 0.8, 0.7}}, {true});
    CHECK(t.ranks[0] == std::vector<int>{1, 2, 3});
    CHECK(t.average == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("tied values share a rank and the next distinct value increments it") {
    const RankTable t = rank_table({"a", "b", "c"}, {"SN"}, {{0.9, 0.9, 0.7}}, {true});
    CHECK(t.ranks[0] == std::vector<int>{1, 1, 2});

    // the comparison-table pattern: five tied bests, then two stragglers
    const RankTable wide =
        rank_table({"a", "b", "c", "d", "e", "f", "g"}, {"SP"},
                   {{1.0, 0.6273, 0.6273, 0.6273, 0.6273, 0.3, 0.6273}}, {true});
    CHECK(wide.ranks[0] == std::vector<int>{1, 2, 2, 2, 2, 3, 2});
}

TEST_CASE("rank direction flips for lower-is-better measures") {
    const RankTable t = rank_table({"a", "b"}, {"err"}, {{0.1, 0.3}}, {false});
    CHECK(t.ranks[0] == std::vector<int>{1, 2});
}

TEST_CASE("a single sampler ranks first everywhere") {
    const RankTable t = rank_table({"solo"}, {"SN", "SP"}, {{0.4}, {0.2}}, {true, true});
    CHECK(t.ranks[0] == std::vector<int>{1});
    CHECK(t.ranks[1] == std::vector<int>{1});
    CHECK(t.average == std::vector<double>{1.0});
}

TEST_CASE("rank_table is invariant under permuting the sampler order") {
    const std::vector<double> row = {0.5, 0.9, 0.7, 0.9};
    const RankTable fwd = rank_table({"a", "b", "c", "d"}, {"SN"}, {row}, {true});
    const RankTable rev =
        rank_table({"d", "c", "b", "a"}, {"SN"}, {{0.9, 0.7, 0.9, 0.5}}, {true});
    for (std::size_t s = 0; s < 4; ++s) {
        CHECK(fwd.ranks[0][s] == rev.ranks[0][3 - s]);
    }
}

TEST_CASE("rank_table rejects missing cells") {
    CHECK_THROWS_AS(rank_table({"a", "b"}, {"SN"}, {{0.5}}, {true}), std::invalid_argument);
    CHECK_THROWS_AS(rank_table({"a"}, {"SN"}, {{std::nan("")}}, {true}), std::invalid_argument);
    CHECK_THROWS_AS(rank_table({"a"}, {"SN", "SP"}, {{0.5}}, {true}), std::invalid_argument);
}

TEST_CASE("average ranks stay within [1, sampler count]") {
    Rng rng(401);
    std::vector<std::vector<double>> values(5, std::vector<double>(6));
    for (auto& row : values) {
        for (double& v : row) v = rng.uniform();
    }
    const RankTable t = rank_table({"a", "b", "c", "d", "e", "f"},
                                   {"SN", "SP", "GM", "FM", "Acc"}, values,
                                   std::vector<bool>(5, true));
    for (double avg : t.average) {
        CHECK(avg >= 1.0);
        CHECK(avg <= 6.0);
    }
}

}  // TEST_SUITE
