#include "sasyno/classifier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "neighbors.hpp"

namespace sasyno {

namespace {

Label least_frequent_label(const Dataset& train) {
    const std::vector<Label> labels = train.distinct_labels();
    Label best = labels.front();
    std::size_t best_count = train.size() + 1;
    for (const Label& label : labels) {
        std::size_t count = 0;
        for (const Sample& s : train) {
            if (s.label == label) ++count;
        }
        if (count < best_count) {  // strict: first observed wins ties
            best_count = count;
            best = label;
        }
    }
    return best;
}

}  // namespace

KnnModel knn_fit(const Dataset& train, std::size_t k, std::optional<Label> tie_label) {
    if (train.empty()) {
        throw std::invalid_argument("knn_fit: empty training set");
    }
    if (k < 1 || k > train.size()) {
        std::ostringstream msg;
        msg << "knn_fit: k = " << k << " outside [1, " << train.size() << "]";
        throw std::invalid_argument(msg.str());
    }
    return KnnModel{train, k, tie_label ? *tie_label : least_frequent_label(train)};
}

std::vector<Label> knn_predict(const KnnModel& model, const Dataset& queries) {
    if (!queries.empty() && queries.dimensionality() != model.train.dimensionality()) {
        throw std::invalid_argument("knn_predict: query dimensionality mismatch");
    }
    std::vector<Label> out;
    out.reserve(queries.size());
    for (const Sample& query : queries) {
        const std::vector<std::size_t> nearest =
            detail::k_nearest(model.train, query.features, model.k);

        // Votes in nearest-first order; labels keyed by first appearance.
        std::vector<Label> seen;
        std::vector<std::size_t> votes;
        for (std::size_t idx : nearest) {
            const Label& label = model.train[idx].label;
            const auto it = std::find(seen.begin(), seen.end(), label);
            if (it == seen.end()) {
                seen.push_back(label);
                votes.push_back(1);
            } else {
                ++votes[static_cast<std::size_t>(it - seen.begin())];
            }
        }
        const std::size_t top = *std::max_element(votes.begin(), votes.end());
        Label chosen;
        bool found = false;
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (votes[i] == top && seen[i] == model.tie_label) {
                chosen = seen[i];
                found = true;
                break;
            }
        }
        if (!found) {
            for (std::size_t i = 0; i < seen.size(); ++i) {
                if (votes[i] == top) {
                    chosen = seen[i];
                    break;
                }
            }
        }
        out.push_back(chosen);
    }
    return out;
}

std::unique_ptr<Classifier> make_classifier(const std::string& kind, std::size_t k,
                                            std::optional<Label> tie_label) {
    if (kind == "knn") {
        return std::make_unique<KnnClassifier>(k, std::move(tie_label));
    }
    throw std::invalid_argument("unknown classifier '" + kind + "', available: {knn}");
}

}  // namespace sasyno
