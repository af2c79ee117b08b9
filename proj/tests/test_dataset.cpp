#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sasyno/dataset.hpp"
#include "test_util.hpp"

using namespace sasyno;
using testutil::make_dataset;

TEST_SUITE("dataset") {

TEST_CASE("add enforces dimensionality and finiteness") {
    Dataset d(2);
    d.add(Sample{{1.0, 2.0}, "a"});
    CHECK_THROWS_AS(d.add(Sample{{1.0}, "a"}), std::invalid_argument);
    CHECK_THROWS_AS(d.add(Sample{{1.0, std::numeric_limits<double>::quiet_NaN()}, "a"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(d.add(Sample{{1.0, std::numeric_limits<double>::infinity()}, "a"}),
                    std::invalid_argument);
    CHECK(d.size() == 1);
}

TEST_CASE("distinct labels keep first-appearance order") {
    Dataset d(1);
    d.add(Sample{{0.0}, "b"});
    d.add(Sample{{1.0}, "a"});
    d.add(Sample{{2.0}, "b"});
    CHECK(d.distinct_labels() == std::vector<Label>{"b", "a"});
}

TEST_CASE("partition_by_class picks the smaller class as minority") {
    Dataset d(1);
    for (int i = 0; i < 5; ++i) d.add(Sample{{double(i)}, "A"});
    for (int i = 0; i < 95; ++i) d.add(Sample{{double(i)}, "B"});
    const ClassPartition part = partition_by_class(d);
    CHECK(part.minority_label == "A");
    CHECK(part.majority_label == "B");
    CHECK(part.n0() == 5);
    CHECK(part.n1() == 95);
}

TEST_CASE("partition tie rule: first observed label wins") {
    Dataset d(1);
    for (int i = 0; i < 4; ++i) {
        d.add(Sample{{double(i)}, i % 2 == 0 ? "B" : "A"});  // B appears first
    }
    const ClassPartition part = partition_by_class(d);
    CHECK(part.minority_label == "B");
}

TEST_CASE("partition rejects non-binary label sets") {
    Dataset d(1);
    d.add(Sample{{0.0}, "A"});
    d.add(Sample{{1.0}, "B"});
    d.add(Sample{{2.0}, "C"});
    CHECK_THROWS_WITH_AS(partition_by_class(d),
                         doctest::Contains("{A, B, C}"), std::invalid_argument);

    Dataset single(1);
    single.add(Sample{{0.0}, "A"});
    CHECK_THROWS_AS(partition_by_class(single), std::invalid_argument);
}

TEST_CASE("partition then concatenation is a permutation of the input") {
    Rng rng(21);
    Dataset d(2);
    for (int i = 0; i < 60; ++i) {
        d.add(Sample{{rng.uniform(), rng.uniform()}, rng.below(3) == 0 ? "x" : "y"});
    }
    const ClassPartition part = partition_by_class(d);
    std::vector<Sample> merged = part.minority.samples();
    merged.insert(merged.end(), part.majority.samples().begin(), part.majority.samples().end());
    CHECK(testutil::same_multiset(merged, d.samples()));
    CHECK(part.n0() + part.n1() == d.size());
    CHECK(part.n0() <= part.n1());
    // index maps point back at the right source rows
    for (std::size_t i = 0; i < part.minority_indices.size(); ++i) {
        CHECK(d[part.minority_indices[i]] == part.minority[i]);
    }
}

TEST_CASE("train_test_split applies the per-class rounding rule") {
    Dataset d(1);
    for (int i = 0; i < 20; ++i) d.add(Sample{{double(i)}, "m"});
    for (int i = 0; i < 80; ++i) d.add(Sample{{double(i) + 100}, "M"});
    Rng rng(17);
    const TrainTestSplit split = train_test_split(d, 0.8, rng);

    auto count = [](const Dataset& ds, const Label& l) {
        std::size_t c = 0;
        for (const Sample& s : ds) {
            if (s.label == l) ++c;
        }
        return c;
    };
    CHECK(count(split.train, "m") == 16);
    CHECK(count(split.train, "M") == 64);
    CHECK(count(split.test, "m") == 4);
    CHECK(count(split.test, "M") == 16);
}

TEST_CASE("train_test_split is deterministic and a permutation") {
    Rng gen(3);
    Dataset d(2);
    for (int i = 0; i < 37; ++i) {
        d.add(Sample{{gen.uniform(), gen.uniform()}, gen.below(4) == 0 ? "a" : "b"});
    }
    Rng r1(99);
    Rng r2(99);
    const TrainTestSplit s1 = train_test_split(d, 0.7, r1);
    const TrainTestSplit s2 = train_test_split(d, 0.7, r2);
    CHECK(s1.train == s2.train);
    CHECK(s1.test == s2.test);

    std::vector<Sample> merged = s1.train.samples();
    merged.insert(merged.end(), s1.test.samples().begin(), s1.test.samples().end());
    CHECK(testutil::same_multiset(merged, d.samples()));
}

TEST_CASE("train_test_split on a 10-sample class gives 8/2") {
    Dataset d(1);
    for (int i = 0; i < 10; ++i) d.add(Sample{{double(i)}, "a"});
    for (int i = 0; i < 10; ++i) d.add(Sample{{double(i) + 50}, "b"});
    Rng rng(1);
    const TrainTestSplit split = train_test_split(d, 0.8, rng);
    CHECK(split.train.size() == 16);
    CHECK(split.test.size() == 4);
}

TEST_CASE("train_test_split keeps both sides nonempty per class") {
    Dataset d(1);
    d.add(Sample{{0.0}, "a"});
    d.add(Sample{{1.0}, "a"});
    d.add(Sample{{2.0}, "b"});
    d.add(Sample{{3.0}, "b"});
    Rng rng(4);
    // round(0.95 * 2) = 2 would empty the test side; the clamp keeps one out
    const TrainTestSplit split = train_test_split(d, 0.95, rng);
    CHECK(split.train.size() == 2);
    CHECK(split.test.size() == 2);

    Dataset tiny(1);
    tiny.add(Sample{{0.0}, "a"});
    tiny.add(Sample{{1.0}, "b"});
    tiny.add(Sample{{2.0}, "b"});
    Rng rng2(4);
    CHECK_THROWS_WITH_AS(train_test_split(tiny, 0.8, rng2), doctest::Contains("'a'"),
                         std::invalid_argument);
}

TEST_CASE("generate_gaussian_imbalanced counts and labels") {
    Rng rng(8);
    const Dataset d =
        generate_gaussian_imbalanced(50, 950, {0.0, 0.0}, {3.0, 3.0}, 1.0, 1.0, rng);
    CHECK(d.size() == 1000);
    std::size_t n0 = 0;
    for (const Sample& s : d) {
        if (s.label == "0") ++n0;
    }
    CHECK(n0 == 50);
    CHECK(d.dimensionality() == 2);
}

TEST_CASE("generate_gaussian_imbalanced with zero spread sits on the centers") {
    Rng rng(8);
    const Dataset d = generate_gaussian_imbalanced(5, 7, {1.5, -2.0}, {4.0, 4.0}, 0.0, 0.0, rng);
    for (const Sample& s : d) {
        if (s.label == "0") {
            CHECK(s.features == std::vector<double>{1.5, -2.0});
        } else {
            CHECK(s.features == std::vector<double>{4.0, 4.0});
        }
    }
    Rng rng2(8);
    CHECK_THROWS_AS(generate_gaussian_imbalanced(5, 7, {0.0}, {1.0, 2.0}, 1.0, 1.0, rng2),
                    std::invalid_argument);
}

TEST_CASE("generate_gaussian_imbalanced empirical means obey the law of large numbers") {
    Rng rng(12);
    const double spread = 2.0;
    const Dataset d = generate_gaussian_imbalanced(100000, 1, {1.0, -1.0}, {50.0, 50.0},
                                                   spread, 0.0, rng);
    double mx = 0.0;
    double my = 0.0;
    for (const Sample& s : d) {
        if (s.label != "0") continue;
        mx += s.features[0];
        my += s.features[1];
    }
    mx /= 100000.0;
    my /= 100000.0;
    CHECK(std::fabs(mx - 1.0) < 0.01 * spread);
    CHECK(std::fabs(my + 1.0) < 0.01 * spread);
}

TEST_CASE("minmax_normalize rescales to [0,1]") {
    const Dataset d = make_dataset({{0.0}, {5.0}, {10.0}});
    const auto [scaled, params] = minmax_normalize(d);
    CHECK(scaled[0].features[0] == 0.0);
    CHECK(scaled[1].features[0] == 0.5);
    CHECK(scaled[2].features[0] == 1.0);
    CHECK(params.mins()[0] == 0.0);
    CHECK(params.maxs()[0] == 10.0);
}

TEST_CASE("minmax_normalize maps constant attributes to zero") {
    const Dataset d = make_dataset({{7.0, 1.0}, {7.0, 2.0}, {7.0, 3.0}});
    const auto [scaled, params] = minmax_normalize(d);
    for (const Sample& s : scaled) {
        CHECK(s.features[0] == 0.0);
    }
}

TEST_CASE("stored NormParams replay the transform on new data") {
    const Dataset train = make_dataset({{0.0}, {5.0}, {10.0}});
    const NormParams params = NormParams::fit(train);
    const Dataset test = make_dataset({{10.0}, {2.5}, {20.0}});
    const Dataset mapped = params.apply(test);
    CHECK(mapped[0].features[0] == 1.0);  // equals the training max
    CHECK(mapped[1].features[0] == 0.25);
    CHECK(mapped[2].features[0] == 2.0);  // out-of-range values extrapolate
}

TEST_CASE("normalization round-trips through the stored parameters") {
    Rng rng(31);
    const Dataset d = make_dataset(testutil::random_points(40, 3, rng, 25.0));
    const auto [scaled, params] = minmax_normalize(d);
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t l = 0; l < d.dimensionality(); ++l) {
            const double v = scaled[i].features[l];
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            const double back =
                params.mins()[l] + v * (params.maxs()[l] - params.mins()[l]);
            CHECK(testutil::close_rel(back, d[i].features[l], 1e-12));
        }
    }
}

}  // TEST_SUITE
