#include "sasyno/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sasyno {

void Dataset::add(Sample sample) {
    if (!dim_fixed_) {
        dim_ = sample.features.size();
        dim_fixed_ = true;
    } else if (sample.features.size() != dim_) {
        std::ostringstream msg;
        msg << "Dataset::add: sample has " << sample.features.size()
            << " features, dataset dimensionality is " << dim_;
        throw std::invalid_argument(msg.str());
    }
    for (double v : sample.features) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("Dataset::add: non-finite feature value");
        }
    }
    samples_.push_back(std::move(sample));
}

std::vector<Label> Dataset::distinct_labels() const {
    std::vector<Label> out;
    for (const Sample& s : samples_) {
        if (std::find(out.begin(), out.end(), s.label) == out.end()) {
            out.push_back(s.label);
        }
    }
    return out;
}

ClassPartition partition_by_class(const Dataset& d) {
    const std::vector<Label> labels = d.distinct_labels();
    if (labels.size() != 2) {
        std::ostringstream msg;
        msg << "partition_by_class: need exactly 2 classes, observed " << labels.size()
            << " {";
        for (std::size_t i = 0; i < labels.size(); ++i) {
            msg << (i ? ", " : "") << labels[i];
        }
        msg << "}";
        throw std::invalid_argument(msg.str());
    }

    std::size_t count_first = 0;
    for (const Sample& s : d) {
        if (s.label == labels[0]) ++count_first;
    }
    const std::size_t count_second = d.size() - count_first;

    // Tie rule: the first-observed label is the minority.
    const bool first_is_minority = count_first <= count_second;
    ClassPartition part;
    part.minority_label = first_is_minority ? labels[0] : labels[1];
    part.majority_label = first_is_minority ? labels[1] : labels[0];
    part.minority = Dataset(d.dimensionality());
    part.majority = Dataset(d.dimensionality());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].label == part.minority_label) {
            part.minority.add(d[i]);
            part.minority_indices.push_back(i);
        } else {
            part.majority.add(d[i]);
            part.majority_indices.push_back(i);
        }
    }
    return part;
}

TrainTestSplit train_test_split(const Dataset& d, double train_fraction, Rng& rng) {
    if (d.empty()) {
        throw std::invalid_argument("train_test_split: empty dataset");
    }
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw std::invalid_argument("train_test_split: train_fraction must lie in (0, 1)");
    }

    std::vector<std::size_t> train_idx;
    std::vector<std::size_t> test_idx;
    for (const Label& label : d.distinct_labels()) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i].label == label) members.push_back(i);
        }
        if (members.size() < 2) {
            throw std::invalid_argument("train_test_split: class '" + label +
                                        "' has fewer than 2 samples");
        }
        std::size_t n_train = static_cast<std::size_t>(
            std::lround(train_fraction * static_cast<double>(members.size())));
        n_train = std::clamp<std::size_t>(n_train, 1, members.size() - 1);

        const std::vector<std::size_t> order = shuffled_indices(members.size(), rng);
        for (std::size_t j = 0; j < members.size(); ++j) {
            (j < n_train ? train_idx : test_idx).push_back(members[order[j]]);
        }
    }
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());

    TrainTestSplit split{Dataset(d.dimensionality()), Dataset(d.dimensionality())};
    split.train.reserve(train_idx.size());
    split.test.reserve(test_idx.size());
    for (std::size_t i : train_idx) split.train.add(d[i]);
    for (std::size_t i : test_idx) split.test.add(d[i]);
    return split;
}

Dataset generate_gaussian_imbalanced(std::size_t n0, std::size_t n1,
                                     const std::vector<double>& center0,
                                     const std::vector<double>& center1,
                                     double spread0, double spread1, Rng& rng) {
    if (n0 < 1 || n1 < 1) {
        throw std::invalid_argument("generate_gaussian_imbalanced: class counts must be >= 1");
    }
    if (center0.size() != center1.size() || center0.empty()) {
        throw std::invalid_argument(
            "generate_gaussian_imbalanced: centers must share a positive dimensionality");
    }
    if (spread0 < 0.0 || spread1 < 0.0) {
        throw std::invalid_argument("generate_gaussian_imbalanced: spreads must be nonnegative");
    }

    Dataset d(center0.size());
    d.reserve(n0 + n1);
    auto emit = [&](std::size_t count, const std::vector<double>& center, double spread,
                    const char* label) {
        for (std::size_t i = 0; i < count; ++i) {
            Sample s;
            s.features.resize(center.size());
            for (std::size_t l = 0; l < center.size(); ++l) {
                s.features[l] = center[l] + rng.normal(spread);
            }
            s.label = label;
            d.add(std::move(s));
        }
    };
    emit(n0, center0, spread0, "0");
    emit(n1, center1, spread1, "1");
    return d;
}

NormParams NormParams::fit(const Dataset& d) {
    if (d.empty()) {
        throw std::invalid_argument("NormParams::fit: empty dataset");
    }
    NormParams p;
    p.min_.assign(d.dimensionality(), 0.0);
    p.max_.assign(d.dimensionality(), 0.0);
    for (std::size_t l = 0; l < d.dimensionality(); ++l) {
        double lo = d[0].features[l];
        double hi = lo;
        for (const Sample& s : d) {
            lo = std::min(lo, s.features[l]);
            hi = std::max(hi, s.features[l]);
        }
        p.min_[l] = lo;
        p.max_[l] = hi;
    }
    return p;
}

Dataset NormParams::apply(const Dataset& d) const {
    if (d.dimensionality() != min_.size()) {
        throw std::invalid_argument("NormParams::apply: dimensionality mismatch");
    }
    Dataset out(d.dimensionality());
    out.reserve(d.size());
    for (const Sample& s : d) {
        Sample t;
        t.label = s.label;
        t.features.resize(s.features.size());
        for (std::size_t l = 0; l < s.features.size(); ++l) {
            const double range = max_[l] - min_[l];
            t.features[l] = range > 0.0 ? (s.features[l] - min_[l]) / range : 0.0;
        }
        out.add(std::move(t));
    }
    return out;
}

std::pair<Dataset, NormParams> minmax_normalize(const Dataset& d) {
    NormParams params = NormParams::fit(d);
    return {params.apply(d), std::move(params)};
}

}  // namespace sasyno
