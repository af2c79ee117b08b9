#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sasyno/dataset.hpp"

namespace sasyno {

// Lazy k-nearest-neighbor model: the training set stored verbatim.
// Vote ties break toward tie_label so that an imbalanced evaluation never
// biases ties toward the majority class.
struct KnnModel {
    Dataset train;
    std::size_t k = 1;
    Label tie_label;
};

// k must lie in [1, train size]. When tie_label is not given it defaults to
// the least frequent training label (first observed wins a count tie).
KnnModel knn_fit(const Dataset& train, std::size_t k,
                 std::optional<Label> tie_label = std::nullopt);

// Majority vote among the k nearest training samples (Euclidean). Distance
// ties break toward the lower training index. Vote ties pick tie_label when
// it is among the tied labels, otherwise the tied label seen nearest first.
std::vector<Label> knn_predict(const KnnModel& model, const Dataset& queries);

// Base-learner plug-in surface; the harness only ships k-NN but external
// classifiers slot in behind this interface.
class Classifier {
public:
    virtual ~Classifier() = default;
    virtual void fit(const Dataset& train) = 0;
    virtual std::vector<Label> predict(const Dataset& queries) const = 0;
    virtual std::string name() const = 0;
};

class KnnClassifier final : public Classifier {
public:
    explicit KnnClassifier(std::size_t k, std::optional<Label> tie_label = std::nullopt)
        : k_(k), tie_label_(std::move(tie_label)) {}

    void fit(const Dataset& train) override { model_ = knn_fit(train, k_, tie_label_); }
    std::vector<Label> predict(const Dataset& queries) const override {
        return knn_predict(model_, queries);
    }
    std::string name() const override { return "knn"; }

private:
    std::size_t k_;
    std::optional<Label> tie_label_;
    KnnModel model_;
};

// Known kinds: "knn". Unknown kinds throw, listing what is available.
std::unique_ptr<Classifier> make_classifier(const std::string& kind, std::size_t k,
                                            std::optional<Label> tie_label = std::nullopt);

}  // namespace sasyno
