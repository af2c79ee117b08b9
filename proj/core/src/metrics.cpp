#include "sasyno/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sasyno {

ConfusionMatrix confusion_matrix(const std::vector<Label>& truth,
                                 const std::vector<Label>& predicted,
                                 const Label& minority_label, const Label& majority_label) {
    if (truth.size() != predicted.size()) {
        std::ostringstream msg;
        msg << "confusion_matrix: " << truth.size() << " truth labels vs "
            << predicted.size() << " predictions";
        throw std::invalid_argument(msg.str());
    }
    auto check = [&](const Label& label) {
        if (label != minority_label && label != majority_label) {
            throw std::invalid_argument("confusion_matrix: label '" + label +
                                        "' outside the binary set {" + minority_label + ", " +
                                        majority_label + "}");
        }
    };
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        check(truth[i]);
        check(predicted[i]);
        const bool actual_min = truth[i] == minority_label;
        const bool pred_min = predicted[i] == minority_label;
        if (actual_min && pred_min) ++cm.tp;
        else if (actual_min) ++cm.fn;
        else if (pred_min) ++cm.fp;
        else ++cm.tn;
    }
    return cm;
}

ConfusionMatrix confusion_matrix(const std::vector<Label>& truth,
                                 const std::vector<Label>& predicted,
                                 const Label& minority_label) {
    std::vector<Label> others;
    auto scan = [&](const std::vector<Label>& labels) {
        for (const Label& label : labels) {
            if (label != minority_label &&
                std::find(others.begin(), others.end(), label) == others.end()) {
                others.push_back(label);
            }
        }
    };
    scan(truth);
    scan(predicted);
    if (others.size() != 1) {
        std::ostringstream msg;
        msg << "confusion_matrix: expected exactly one non-minority label, found "
            << others.size();
        throw std::invalid_argument(msg.str());
    }
    return confusion_matrix(truth, predicted, minority_label, others.front());
}

std::string to_string(Measure m) {
    switch (m) {
        case Measure::SN: return "SN";
        case Measure::SP: return "SP";
        case Measure::GM: return "GM";
        case Measure::FM: return "FM";
        case Measure::Acc: return "Acc";
    }
    return "?";
}

double MetricSet::operator[](Measure m) const {
    switch (m) {
        case Measure::SN: return sn;
        case Measure::SP: return sp;
        case Measure::GM: return gm;
        case Measure::FM: return fm;
        case Measure::Acc: return acc;
    }
    return 0.0;
}

MetricSet compute_metrics(const ConfusionMatrix& cm) {
    if (cm.actual_minority() == 0) {
        throw std::invalid_argument("compute_metrics: no minority samples in truth, SN undefined");
    }
    if (cm.actual_majority() == 0) {
        throw std::invalid_argument("compute_metrics: no majority samples in truth, SP undefined");
    }
    MetricSet m;
    m.sn = static_cast<double>(cm.tp) / static_cast<double>(cm.actual_minority());
    m.sp = static_cast<double>(cm.tn) / static_cast<double>(cm.actual_majority());
    m.gm = std::sqrt(m.sn * m.sp);
    const std::size_t fm_denom = 2 * cm.tp + cm.fn + cm.fp;
    if (fm_denom == 0) {
        m.fm = 0.0;
        m.degenerate = true;
    } else {
        m.fm = static_cast<double>(2 * cm.tp) / static_cast<double>(fm_denom);
    }
    m.acc = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
    return m;
}

RankTable rank_table(const std::vector<std::string>& samplers,
                     const std::vector<std::string>& measures,
                     const std::vector<std::vector<double>>& values,
                     const std::vector<bool>& higher_is_better) {
    if (values.size() != measures.size() || higher_is_better.size() != measures.size()) {
        throw std::invalid_argument("rank_table: one value row and direction per measure required");
    }
    RankTable table;
    table.samplers = samplers;
    table.measures = measures;
    table.ranks.resize(measures.size());
    table.average.assign(samplers.size(), 0.0);

    for (std::size_t m = 0; m < measures.size(); ++m) {
        const std::vector<double>& row = values[m];
        if (row.size() != samplers.size()) {
            throw std::invalid_argument("rank_table: missing cell in measure " + measures[m]);
        }
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("rank_table: non-finite cell in measure " +
                                            measures[m]);
            }
        }
        std::vector<double> distinct = row;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (higher_is_better[m]) {
            std::reverse(distinct.begin(), distinct.end());
        }
        table.ranks[m].resize(row.size());
        for (std::size_t s = 0; s < row.size(); ++s) {
            const auto it = std::find(distinct.begin(), distinct.end(), row[s]);
            table.ranks[m][s] = static_cast<int>(it - distinct.begin()) + 1;
            table.average[s] += static_cast<double>(table.ranks[m][s]);
        }
    }
    for (double& a : table.average) {
        a /= static_cast<double>(measures.size());
    }
    return table;
}

}  // namespace sasyno
