#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sasyno/dataset.hpp"
#include "sasyno/rng.hpp"

namespace sasyno {

// Distance statistics of a sample set that drive synthesis. gamma is the
// mean of the pairwise Euclidean distances not exceeding their global mean
// mu (so gamma <= mu); sigma[l] is the analogous per-attribute statistic
// over absolute coordinate differences, bounded by the per-attribute mean
// mu_attr[l].
struct DisturbanceProfile {
    double gamma = 0.0;
    double mu = 0.0;
    std::vector<double> sigma;
    std::vector<double> mu_attr;
};

// Mean Euclidean distance over all unordered sample pairs. Needs >= 2
// samples.
double mean_pairwise_distance(const Dataset& samples);

// Mean of the pairwise distances that are <= the global mean distance. At
// least one pair always qualifies, so the value is well defined.
double gamma_quantifier(const Dataset& samples);

// Unordered index pairs (i < j) whose Euclidean distance is <= gamma,
// inclusive; each pair stored once.
struct PairSet {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    bool empty() const noexcept { return pairs.empty(); }
    std::size_t size() const noexcept { return pairs.size(); }
};

PairSet neighbor_pairs(const Dataset& samples, double gamma);

// Each sample paired with its nearest distinct neighbor (ties toward the
// lower index), deduplicated. The limiting case of neighbor_pairs as gamma
// shrinks to the minimum pairwise distance; used as the fallback when
// rounding leaves neighbor_pairs empty.
PairSet nearest_neighbor_pairs(const Dataset& samples);

// Per-attribute (sigma, mu_attr): mu_attr[l] is the mean absolute difference
// of attribute l over all pairs, sigma[l] the mean over pairs whose
// difference is <= mu_attr[l]. Constant attributes yield sigma[l] = 0.
std::pair<std::vector<double>, std::vector<double>> per_attribute_sigma(const Dataset& samples);

// All four statistics of one sample set.
DisturbanceProfile disturbance_profile(const Dataset& samples);

// Adds independent zero-mean Gaussian noise with per-attribute deviation
// sigma[l] to both endpoints; p's noise vector is drawn first. Fresh draws
// on every call.
std::pair<std::vector<double>, std::vector<double>> gaussian_disturb(
    const std::vector<double>& p, const std::vector<double>& q,
    const std::vector<double>& sigma, Rng& rng);

// Elementwise random interpolation: s[l] = r[l]*p_hat[l] + (1-r[l])*q_hat[l]
// with each r[l] uniform on [0, 1). Every coordinate of the result lies
// between the corresponding endpoint coordinates.
std::vector<double> interpolate(const std::vector<double>& p_hat,
                                const std::vector<double>& q_hat, Rng& rng);

// Deterministic kernel of interpolate() with the mixing vector supplied;
// mix[l] = 1 returns p_hat[l] exactly, mix[l] = 0 returns q_hat[l] exactly.
std::vector<double> interpolate_at(const std::vector<double>& p_hat,
                                   const std::vector<double>& q_hat,
                                   const std::vector<double>& mix);

// How one synthetic sample was produced: the source pair (indices into the
// minority sample list) and the disturbed endpoints it was interpolated
// between.
struct SyntheticProvenance {
    std::size_t pair_i = 0;
    std::size_t pair_j = 0;
    std::vector<double> p_hat;
    std::vector<double> q_hat;
};

struct SyntheticBatch {
    std::vector<Sample> synthetics;
    std::vector<SyntheticProvenance> provenance;
    DisturbanceProfile profile;
    bool used_nearest_fallback = false;
};

// Generates target_count synthetics from a minority set of >= 2 samples:
// computes the disturbance profile once, collects the neighboring pairs,
// then repeatedly picks a pair uniformly with replacement, disturbs both
// endpoints and interpolates. When no pair lies within gamma (possible only
// through rounding of near-ties), each sample is paired with its nearest
// neighbor instead. Deterministic given the stream.
SyntheticBatch sasyno_oversample(const Dataset& minority, std::size_t target_count, Rng& rng);

// Balances a binary dataset by appending majority_count - minority_count
// synthetics to it; original samples pass through unchanged.
Dataset balance(const Dataset& d, Rng& rng);

}  // namespace sasyno
