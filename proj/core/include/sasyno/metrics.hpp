#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "sasyno/dataset.hpp"

namespace sasyno {

// Binary confusion counts with the minority class as the positive one:
// tp/fn count minority truths, fp/tn majority truths.
struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fn = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;

    std::size_t predicted_minority() const noexcept { return tp + fp; }  // K_0
    std::size_t predicted_majority() const noexcept { return fn + tn; }  // K_1
    std::size_t actual_minority() const noexcept { return tp + fn; }     // N_0
    std::size_t actual_majority() const noexcept { return fp + tn; }     // N_1
    std::size_t total() const noexcept { return tp + fn + fp + tn; }
};

// Counts prediction outcomes against ground truth. Lists must have equal
// length and only carry the two given labels.
ConfusionMatrix confusion_matrix(const std::vector<Label>& truth,
                                 const std::vector<Label>& predicted,
                                 const Label& minority_label, const Label& majority_label);

// Convenience overload deriving the majority label as the single other
// label present; more than one other label is an error.
ConfusionMatrix confusion_matrix(const std::vector<Label>& truth,
                                 const std::vector<Label>& predicted,
                                 const Label& minority_label);

enum class Measure { SN, SP, GM, FM, Acc };

constexpr std::array<Measure, 5> kAllMeasures = {Measure::SN, Measure::SP, Measure::GM,
                                                 Measure::FM, Measure::Acc};

std::string to_string(Measure m);

// sensitivity, specificity, geometric mean, F-measure, overall accuracy;
// all in [0, 1]. `degenerate` marks a metric whose denominator was zero and
// was reported as 0 instead of aborting an aggregation.
struct MetricSet {
    double sn = 0.0;
    double sp = 0.0;
    double gm = 0.0;
    double fm = 0.0;
    double acc = 0.0;
    bool degenerate = false;

    double operator[](Measure m) const;
};

// Requires both truth classes present (tp+fn > 0 and fp+tn > 0); otherwise
// throws naming the absent class.
MetricSet compute_metrics(const ConfusionMatrix& cm);

// Per-measure ranks of each sampler plus each sampler's average rank.
// Tied values share a rank and the next distinct value takes the next
// integer, matching rank tables where five equal bests all print 1,
// the runner-up 2, and so on.
struct RankTable {
    std::vector<std::string> samplers;
    std::vector<std::string> measures;
    std::vector<std::vector<int>> ranks;  // [measure][sampler]
    std::vector<double> average;          // [sampler]
};

// values[measure][sampler]; higher_is_better selects the sort direction per
// measure. Every cell must be present and finite.
RankTable rank_table(const std::vector<std::string>& samplers,
                     const std::vector<std::string>& measures,
                     const std::vector<std::vector<double>>& values,
                     const std::vector<bool>& higher_is_better);

}  // namespace sasyno
