#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sasyno/rng.hpp"

namespace sasyno {

// Class identifiers are opaque strings; the minority/majority roles are
// assigned at partition time.
using Label = std::string;

struct Sample {
    std::vector<double> features;
    Label label;

    friend bool operator==(const Sample&, const Sample&) = default;
};

// Ordered collection of samples sharing one dimensionality. Every feature
// value is finite; both invariants are enforced on insertion.
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::size_t dimensionality)
        : dim_(dimensionality), dim_fixed_(true) {}

    void add(Sample sample);
    void reserve(std::size_t n) { samples_.reserve(n); }

    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }
    std::size_t dimensionality() const noexcept { return dim_; }

    const Sample& operator[](std::size_t i) const { return samples_[i]; }
    const std::vector<Sample>& samples() const noexcept { return samples_; }
    auto begin() const noexcept { return samples_.begin(); }
    auto end() const noexcept { return samples_.end(); }

    // Distinct labels in order of first appearance.
    std::vector<Label> distinct_labels() const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::size_t dim_ = 0;
    bool dim_fixed_ = false;
    std::vector<Sample> samples_;
};

// Binary split of a dataset into its minority (class 0) and majority
// (class 1) parts. On an exact size tie the label observed first in the
// source order becomes the minority. The index vectors map each part's
// samples back to their positions in the source dataset.
struct ClassPartition {
    Dataset minority;
    Dataset majority;
    Label minority_label;
    Label majority_label;
    std::vector<std::size_t> minority_indices;
    std::vector<std::size_t> majority_indices;

    std::size_t n0() const noexcept { return minority.size(); }
    std::size_t n1() const noexcept { return majority.size(); }
};

// Requires exactly two distinct labels; otherwise throws, naming what was
// observed.
ClassPartition partition_by_class(const Dataset& d);

struct TrainTestSplit {
    Dataset train;
    Dataset test;
};

// Stratified split: per class, round(train_fraction * class_size) samples go
// to the training side, clamped so both sides keep at least one sample per
// class. Classes with fewer than two samples are an error. Both outputs
// preserve the source order.
TrainTestSplit train_test_split(const Dataset& d, double train_fraction, Rng& rng);

// Two isotropic Gaussian blobs: n0 samples labelled "0" around center0 and
// n1 samples labelled "1" around center1.
Dataset generate_gaussian_imbalanced(std::size_t n0, std::size_t n1,
                                     const std::vector<double>& center0,
                                     const std::vector<double>& center1,
                                     double spread0, double spread1, Rng& rng);

// Per-attribute min/max of a training set; lets the identical affine rescale
// be replayed on other data (e.g. a test set).
class NormParams {
public:
    static NormParams fit(const Dataset& d);

    // (v - min) / (max - min) per attribute; constant attributes map to 0.
    Dataset apply(const Dataset& d) const;

    const std::vector<double>& mins() const noexcept { return min_; }
    const std::vector<double>& maxs() const noexcept { return max_; }

private:
    std::vector<double> min_;
    std::vector<double> max_;
};

std::pair<Dataset, NormParams> minmax_normalize(const Dataset& d);

}  // namespace sasyno
