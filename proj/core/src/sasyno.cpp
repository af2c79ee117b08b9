#include "sasyno/sasyno.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "neighbors.hpp"

namespace sasyno {

namespace {

void require_pairable(const Dataset& samples, const char* op) {
    if (samples.size() < 2) {
        throw std::invalid_argument(std::string(op) + ": need at least 2 samples");
    }
}

// Mean of the values <= their own mean. The filtered set is nonempty in
// exact arithmetic (the minimum never exceeds the mean); if rounding of a
// near-tie empties it, the minimum itself is the limiting answer.
double mean_below_mean(const std::vector<double>& values, double mean) {
    double sum = 0.0;
    std::size_t count = 0;
    for (double v : values) {
        if (v <= mean) {
            sum += v;
            ++count;
        }
    }
    if (count == 0) {
        return *std::min_element(values.begin(), values.end());
    }
    return sum / static_cast<double>(count);
}

std::vector<double> pairwise_distances(const Dataset& samples) {
    const std::size_t n = samples.size();
    std::vector<double> d;
    d.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            d.push_back(detail::euclidean(samples[i].features, samples[j].features));
        }
    }
    return d;
}

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace

double mean_pairwise_distance(const Dataset& samples) {
    require_pairable(samples, "mean_pairwise_distance");
    return mean_of(pairwise_distances(samples));
}

double gamma_quantifier(const Dataset& samples) {
    require_pairable(samples, "gamma_quantifier");
    const std::vector<double> d = pairwise_distances(samples);
    const double mu = mean_of(d);
    // gamma <= mu holds exactly; rounding may nudge the filtered mean past mu.
    return std::min(mean_below_mean(d, mu), mu);
}

PairSet neighbor_pairs(const Dataset& samples, double gamma) {
    if (gamma < 0.0) {
        throw std::invalid_argument("neighbor_pairs: gamma must be nonnegative");
    }
    PairSet set;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            if (detail::euclidean(samples[i].features, samples[j].features) <= gamma) {
                set.pairs.emplace_back(i, j);
            }
        }
    }
    return set;
}

PairSet nearest_neighbor_pairs(const Dataset& samples) {
    require_pairable(samples, "nearest_neighbor_pairs");
    PairSet set;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const std::size_t j = detail::nearest_neighbor(samples, i);
        set.pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(set.pairs.begin(), set.pairs.end());
    set.pairs.erase(std::unique(set.pairs.begin(), set.pairs.end()), set.pairs.end());
    return set;
}

std::pair<std::vector<double>, std::vector<double>> per_attribute_sigma(const Dataset& samples) {
    require_pairable(samples, "per_attribute_sigma");
    const std::size_t m = samples.dimensionality();
    std::vector<double> sigma(m, 0.0);
    std::vector<double> mu_attr(m, 0.0);
    std::vector<double> diffs;
    diffs.reserve(samples.size() * (samples.size() - 1) / 2);
    for (std::size_t l = 0; l < m; ++l) {
        diffs.clear();
        for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
            for (std::size_t j = i + 1; j < samples.size(); ++j) {
                diffs.push_back(std::fabs(samples[i].features[l] - samples[j].features[l]));
            }
        }
        mu_attr[l] = mean_of(diffs);
        sigma[l] = std::min(mean_below_mean(diffs, mu_attr[l]), mu_attr[l]);
    }
    return {std::move(sigma), std::move(mu_attr)};
}

DisturbanceProfile disturbance_profile(const Dataset& samples) {
    require_pairable(samples, "disturbance_profile");
    DisturbanceProfile profile;
    const std::vector<double> d = pairwise_distances(samples);
    profile.mu = mean_of(d);
    profile.gamma = std::min(mean_below_mean(d, profile.mu), profile.mu);
    auto [sigma, mu_attr] = per_attribute_sigma(samples);
    profile.sigma = std::move(sigma);
    profile.mu_attr = std::move(mu_attr);
    return profile;
}

std::pair<std::vector<double>, std::vector<double>> gaussian_disturb(
    const std::vector<double>& p, const std::vector<double>& q,
    const std::vector<double>& sigma, Rng& rng) {
    if (p.size() != q.size() || p.size() != sigma.size()) {
        throw std::invalid_argument("gaussian_disturb: dimensionality mismatch");
    }
    std::vector<double> p_hat(p.size());
    std::vector<double> q_hat(q.size());
    for (std::size_t l = 0; l < p.size(); ++l) {
        p_hat[l] = p[l] + rng.normal(sigma[l]);
    }
    for (std::size_t l = 0; l < q.size(); ++l) {
        q_hat[l] = q[l] + rng.normal(sigma[l]);
    }
    return {std::move(p_hat), std::move(q_hat)};
}

std::vector<double> interpolate_at(const std::vector<double>& p_hat,
                                   const std::vector<double>& q_hat,
                                   const std::vector<double>& mix) {
    if (p_hat.size() != q_hat.size() || p_hat.size() != mix.size()) {
        throw std::invalid_argument("interpolate: dimensionality mismatch");
    }
    std::vector<double> s(p_hat.size());
    for (std::size_t l = 0; l < s.size(); ++l) {
        // lerp is exact at both ends and stays inside [min, max] for
        // mix in [0, 1], which the interpolation-bound invariant needs.
        s[l] = std::lerp(q_hat[l], p_hat[l], mix[l]);
    }
    return s;
}

std::vector<double> interpolate(const std::vector<double>& p_hat,
                                const std::vector<double>& q_hat, Rng& rng) {
    if (p_hat.size() != q_hat.size()) {
        throw std::invalid_argument("interpolate: dimensionality mismatch");
    }
    std::vector<double> mix(p_hat.size());
    for (double& r : mix) r = rng.uniform();
    return interpolate_at(p_hat, q_hat, mix);
}

SyntheticBatch sasyno_oversample(const Dataset& minority, std::size_t target_count, Rng& rng) {
    require_pairable(minority, "sasyno_oversample");

    SyntheticBatch batch;
    batch.profile = disturbance_profile(minority);

    PairSet pairs = neighbor_pairs(minority, batch.profile.gamma);
    if (pairs.empty()) {
        pairs = nearest_neighbor_pairs(minority);
        batch.used_nearest_fallback = true;
    }

    const Label label = minority[0].label;
    batch.synthetics.reserve(target_count);
    batch.provenance.reserve(target_count);
    for (std::size_t k = 0; k < target_count; ++k) {
        const auto [i, j] = pairs.pairs[rng.below(pairs.size())];
        auto [p_hat, q_hat] =
            gaussian_disturb(minority[i].features, minority[j].features, batch.profile.sigma, rng);
        std::vector<double> s = interpolate(p_hat, q_hat, rng);
        batch.synthetics.push_back(Sample{std::move(s), label});
        batch.provenance.push_back(SyntheticProvenance{i, j, std::move(p_hat), std::move(q_hat)});
    }
    return batch;
}

Dataset balance(const Dataset& d, Rng& rng) {
    const ClassPartition part = partition_by_class(d);
    const std::size_t deficit = part.n1() - part.n0();
    if (deficit == 0) {
        return d;
    }
    const SyntheticBatch batch = sasyno_oversample(part.minority, deficit, rng);
    Dataset out(d.dimensionality());
    out.reserve(d.size() + batch.synthetics.size());
    for (const Sample& s : d) out.add(s);
    for (const Sample& s : batch.synthetics) out.add(s);
    return out;
}

}  // namespace sasyno
