#include "sasyno/samplers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "neighbors.hpp"

namespace sasyno {

namespace {

constexpr const char* kKindNames[] = {"sasyno", "smote",  "adasyn", "blsmote",
                                      "slsmote", "rds",   "orig"};

void require_minority(const Dataset& minority, std::size_t k, const char* op) {
    if (minority.size() < 2) {
        throw std::invalid_argument(std::string(op) + ": need at least 2 minority samples");
    }
    if (k < 1 || k > minority.size() - 1) {
        std::ostringstream msg;
        msg << op << ": k = " << k << " outside [1, " << minority.size() - 1 << "]";
        throw std::invalid_argument(msg.str());
    }
}

// Minority + majority stacked so minority sample i keeps index i; used for
// full-training-set neighbor searches.
Dataset stack_partition(const ClassPartition& train) {
    Dataset full(train.minority.dimensionality());
    full.reserve(train.n0() + train.n1());
    for (const Sample& s : train.minority) full.add(s);
    for (const Sample& s : train.majority) full.add(s);
    return full;
}

std::vector<std::vector<std::size_t>> minority_neighbor_lists(const Dataset& minority,
                                                              std::size_t k) {
    std::vector<std::vector<std::size_t>> lists(minority.size());
    for (std::size_t i = 0; i < minority.size(); ++i) {
        lists[i] = detail::k_nearest(minority, minority[i].features, k, i);
    }
    return lists;
}

// Majority counts among each minority sample's k nearest neighbors in the
// stacked training set (minority indices come first there).
std::vector<std::size_t> majority_neighbor_counts(const ClassPartition& train,
                                                  const Dataset& full, std::size_t k) {
    std::vector<std::size_t> counts(train.n0(), 0);
    for (std::size_t i = 0; i < train.n0(); ++i) {
        for (std::size_t nn : detail::k_nearest(full, train.minority[i].features, k, i)) {
            if (nn >= train.n0()) ++counts[i];
        }
    }
    return counts;
}

Sample make_synthetic(const Dataset& minority, std::size_t base, std::size_t neighbor,
                      double lambda) {
    const std::vector<double>& b = minority[base].features;
    const std::vector<double>& n = minority[neighbor].features;
    Sample s;
    s.label = minority[base].label;
    s.features.resize(b.size());
    for (std::size_t l = 0; l < b.size(); ++l) {
        s.features[l] = std::lerp(b[l], n[l], lambda);
    }
    return s;
}

void emit(InterpolatedBatch& batch, const Dataset& minority, std::size_t base,
          std::size_t neighbor, double lambda) {
    batch.synthetics.push_back(make_synthetic(minority, base, neighbor, lambda));
    batch.provenance.push_back(InterpolationRecord{base, neighbor, lambda});
}

}  // namespace

SamplerKind sampler_kind_from_string(std::string_view name) {
    std::string lowered(name);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (std::size_t i = 0; i < std::size(kKindNames); ++i) {
        if (lowered == kKindNames[i]) return static_cast<SamplerKind>(i);
    }
    std::ostringstream msg;
    msg << "unknown sampler '" << name << "', expected one of {";
    for (std::size_t i = 0; i < std::size(kKindNames); ++i) {
        msg << (i ? ", " : "") << kKindNames[i];
    }
    msg << "}";
    throw std::invalid_argument(msg.str());
}

std::string to_string(SamplerKind kind) {
    return kKindNames[static_cast<std::size_t>(kind)];
}

const std::vector<SamplerKind>& all_sampler_kinds() {
    static const std::vector<SamplerKind> kinds = {
        SamplerKind::Sasyno, SamplerKind::Smote,   SamplerKind::Adasyn, SamplerKind::Blsmote,
        SamplerKind::Slsmote, SamplerKind::Rds,    SamplerKind::Orig};
    return kinds;
}

InterpolatedBatch smote(const Dataset& minority, std::size_t n_syn, std::size_t k, Rng& rng) {
    require_minority(minority, k, "smote");
    const auto neighbors = minority_neighbor_lists(minority, k);
    InterpolatedBatch batch;
    batch.synthetics.reserve(n_syn);
    for (std::size_t t = 0; t < n_syn; ++t) {
        const std::size_t base = rng.below(minority.size());
        const std::size_t nn = neighbors[base][rng.below(k)];
        emit(batch, minority, base, nn, rng.uniform());
    }
    return batch;
}

InterpolatedBatch adasyn(const ClassPartition& train, std::size_t k, Rng& rng) {
    require_minority(train.minority, k, "adasyn");
    InterpolatedBatch batch;
    const std::size_t total = train.n1() - train.n0();
    if (total == 0) return batch;

    const Dataset full = stack_partition(train);
    const std::vector<std::size_t> majority_counts = majority_neighbor_counts(train, full, k);

    const std::size_t n0 = train.n0();
    std::vector<double> weights(n0);
    double sum = 0.0;
    for (std::size_t i = 0; i < n0; ++i) {
        weights[i] = static_cast<double>(majority_counts[i]) / static_cast<double>(k);
        sum += weights[i];
    }
    if (sum == 0.0) {
        std::fill(weights.begin(), weights.end(), 1.0 / static_cast<double>(n0));
    } else {
        for (double& w : weights) w /= sum;
    }

    std::vector<std::size_t> allocation(n0);
    long long allocated = 0;
    for (std::size_t i = 0; i < n0; ++i) {
        allocation[i] = static_cast<std::size_t>(
            std::llround(weights[i] * static_cast<double>(total)));
        allocated += static_cast<long long>(allocation[i]);
    }

    // Rounding residue: top up the heaviest samples / drain the lightest
    // non-empty ones until the total is exact. Ties resolve by index.
    std::vector<std::size_t> order(n0);
    std::iota(order.begin(), order.end(), 0);
    long long residue = static_cast<long long>(total) - allocated;
    if (residue > 0) {
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return weights[a] != weights[b] ? weights[a] > weights[b] : a < b;
        });
        for (std::size_t pos = 0; residue > 0; pos = (pos + 1) % n0) {
            ++allocation[order[pos]];
            --residue;
        }
    } else if (residue < 0) {
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return weights[a] != weights[b] ? weights[a] < weights[b] : a < b;
        });
        for (std::size_t pos = 0; residue < 0; pos = (pos + 1) % n0) {
            if (allocation[order[pos]] > 0) {
                --allocation[order[pos]];
                ++residue;
            }
        }
    }

    const auto neighbors = minority_neighbor_lists(train.minority, k);
    batch.synthetics.reserve(total);
    for (std::size_t i = 0; i < n0; ++i) {
        for (std::size_t t = 0; t < allocation[i]; ++t) {
            const std::size_t nn = neighbors[i][rng.below(k)];
            emit(batch, train.minority, i, nn, rng.uniform());
        }
    }
    return batch;
}

InterpolatedBatch blsmote(const ClassPartition& train, std::size_t k, Rng& rng) {
    require_minority(train.minority, k, "blsmote");
    const std::size_t total = train.n1() - train.n0();

    const Dataset full = stack_partition(train);
    const std::vector<std::size_t> majority_counts = majority_neighbor_counts(train, full, k);

    std::vector<std::size_t> danger;
    for (std::size_t i = 0; i < train.n0(); ++i) {
        const std::size_t m = majority_counts[i];
        if (m == k) continue;                    // noise
        if (2 * m >= k) danger.push_back(i);     // borderline
    }

    if (danger.empty()) {
        InterpolatedBatch batch = smote(train.minority, total, k, rng);
        batch.used_fallback = true;
        return batch;
    }

    const auto neighbors = minority_neighbor_lists(train.minority, k);
    InterpolatedBatch batch;
    batch.synthetics.reserve(total);
    for (std::size_t t = 0; t < total; ++t) {
        const std::size_t base = danger[rng.below(danger.size())];
        const std::size_t nn = neighbors[base][rng.below(k)];
        emit(batch, train.minority, base, nn, rng.uniform());
    }
    return batch;
}

InterpolatedBatch slsmote(const ClassPartition& train, std::size_t k, Rng& rng) {
    require_minority(train.minority, k, "slsmote");
    const std::size_t total = train.n1() - train.n0();

    const Dataset full = stack_partition(train);
    const std::size_t n0 = train.n0();
    std::vector<std::size_t> safe_level(n0, 0);
    for (std::size_t i = 0; i < n0; ++i) {
        for (std::size_t nn : detail::k_nearest(full, train.minority[i].features, k, i)) {
            if (nn < n0) ++safe_level[i];
        }
    }

    const auto neighbors = minority_neighbor_lists(train.minority, k);
    InterpolatedBatch batch;
    batch.synthetics.reserve(total);
    const std::size_t max_attempts = 100 * total;
    for (std::size_t attempt = 0; attempt < max_attempts && batch.synthetics.size() < total;
         ++attempt) {
        const std::size_t base = rng.below(n0);
        const std::size_t nn = neighbors[base][rng.below(k)];
        const std::size_t sl_p = safe_level[base];
        const std::size_t sl_n = safe_level[nn];
        if (sl_p == 0 && sl_n == 0) continue;

        double lambda;
        if (sl_n == 0) {
            lambda = 0.0;  // duplicate the safe base
        } else {
            const double ratio = static_cast<double>(sl_p) / static_cast<double>(sl_n);
            double lo = 0.0;
            double hi = 1.0;
            if (ratio > 1.0) {
                hi = 1.0 / ratio;
            } else if (ratio < 1.0) {
                lo = 1.0 - ratio;
            }
            lambda = lo + rng.uniform() * (hi - lo);
        }
        emit(batch, train.minority, base, nn, lambda);
    }

    while (batch.synthetics.size() < total) {
        const std::size_t base = rng.below(n0);
        const std::size_t nn = neighbors[base][rng.below(k)];
        emit(batch, train.minority, base, nn, rng.uniform());
        ++batch.smote_padded;
    }
    return batch;
}

Dataset random_downsample(const Dataset& majority, std::size_t target, Rng& rng) {
    if (target > majority.size()) {
        std::ostringstream msg;
        msg << "random_downsample: target " << target << " exceeds majority size "
            << majority.size();
        throw std::invalid_argument(msg.str());
    }
    Dataset out(majority.dimensionality());
    out.reserve(target);
    for (std::size_t i : sample_indices(majority.size(), target, rng)) {
        out.add(majority[i]);
    }
    return out;
}

Dataset apply_sampler(const SamplerConfig& config, const Dataset& train, Rng& rng,
                      std::vector<std::string>* log) {
    if (config.kind == SamplerKind::Orig) {
        return train;
    }

    const ClassPartition part = partition_by_class(train);
    const std::size_t deficit = part.n1() - part.n0();

    if (config.kind == SamplerKind::Rds) {
        const std::vector<std::size_t> keep = sample_indices(part.n1(), part.n0(), rng);
        std::vector<std::size_t> source;
        source.reserve(2 * part.n0());
        source.insert(source.end(), part.minority_indices.begin(), part.minority_indices.end());
        for (std::size_t i : keep) source.push_back(part.majority_indices[i]);
        std::sort(source.begin(), source.end());
        Dataset out(train.dimensionality());
        out.reserve(source.size());
        for (std::size_t i : source) out.add(train[i]);
        return out;
    }

    if (deficit == 0) {
        return train;  // already balanced, nothing to synthesize
    }

    std::size_t k = config.k_neighbors;
    if (config.kind != SamplerKind::Sasyno && part.n0() >= 2 && k > part.n0() - 1) {
        k = part.n0() - 1;
        if (log) {
            std::ostringstream msg;
            msg << to_string(config.kind) << ": k capped from " << config.k_neighbors
                << " to " << k << " (minority size " << part.n0() << ")";
            log->push_back(msg.str());
        }
    }

    std::vector<Sample> synthetics;
    switch (config.kind) {
        case SamplerKind::Sasyno:
            synthetics = sasyno_oversample(part.minority, deficit, rng).synthetics;
            break;
        case SamplerKind::Smote:
            synthetics = smote(part.minority, deficit, k, rng).synthetics;
            break;
        case SamplerKind::Adasyn:
            synthetics = adasyn(part, k, rng).synthetics;
            break;
        case SamplerKind::Blsmote:
            synthetics = blsmote(part, k, rng).synthetics;
            break;
        case SamplerKind::Slsmote:
            synthetics = slsmote(part, k, rng).synthetics;
            break;
        default:
            throw std::logic_error("apply_sampler: unhandled sampler kind");
    }

    Dataset out(train.dimensionality());
    out.reserve(train.size() + synthetics.size());
    for (const Sample& s : train) out.add(s);
    for (Sample& s : synthetics) out.add(std::move(s));
    return out;
}

}  // namespace sasyno
