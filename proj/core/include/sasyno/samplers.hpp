#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sasyno/dataset.hpp"
#include "sasyno/rng.hpp"
#include "sasyno/sasyno.hpp"

namespace sasyno {

enum class SamplerKind { Sasyno, Smote, Adasyn, Blsmote, Slsmote, Rds, Orig };

SamplerKind sampler_kind_from_string(std::string_view name);
std::string to_string(SamplerKind kind);
const std::vector<SamplerKind>& all_sampler_kinds();

struct SamplerConfig {
    SamplerKind kind = SamplerKind::Sasyno;
    std::size_t k_neighbors = 5;  // capped at minority size - 1 when applied
    std::uint64_t seed = 0;       // used when a sampler runs standalone
};

// One synthetic generated on the segment from a base minority sample toward
// a minority neighbor: s = base + lambda * (neighbor - base). Indices refer
// to the minority sample list.
struct InterpolationRecord {
    std::size_t base_index = 0;
    std::size_t neighbor_index = 0;
    double lambda = 0.0;
};

struct InterpolatedBatch {
    std::vector<Sample> synthetics;
    std::vector<InterpolationRecord> provenance;
    bool used_fallback = false;   // BLSMOTE: no danger samples, plain SMOTE ran
    std::size_t smote_padded = 0; // SLSMOTE: synthetics produced by the padding path
};

// Classic SMOTE: base sample uniform over the minority, neighbor uniform
// among its k nearest minority neighbors, one scalar lambda in [0, 1) per
// synthetic. Requires 1 <= k <= minority size - 1.
InterpolatedBatch smote(const Dataset& minority, std::size_t n_syn, std::size_t k, Rng& rng);

// ADASYN: per minority sample, the fraction of majority samples among its k
// nearest neighbors in the full training set weights how many of the
// n1 - n0 synthetics it seeds (rounded, residue fixed so the total is
// exact). With no majority neighbors anywhere the weights are uniform.
InterpolatedBatch adasyn(const ClassPartition& train, std::size_t k, Rng& rng);

// Borderline-SMOTE: minority samples whose k full-set neighbors are all
// majority count as noise and are skipped; those with at least half
// majority neighbors are the danger set and seed all synthetics. An empty
// danger set falls back to plain SMOTE over the whole minority.
InterpolatedBatch blsmote(const ClassPartition& train, std::size_t k, Rng& rng);

// Safe-Level-SMOTE: the interpolation gap is confined toward the safer of
// the pair (safe level = minority count among k full-set neighbors);
// both-unsafe pairs are skipped. After 100 * (n1 - n0) attempts the
// remainder is padded with plain SMOTE.
InterpolatedBatch slsmote(const ClassPartition& train, std::size_t k, Rng& rng);

// Uniform sample of `target` majority samples without replacement,
// returned in their original order.
Dataset random_downsample(const Dataset& majority, std::size_t target, Rng& rng);

// Dispatches to the configured sampler on a binary training set.
// Over-samplers return the input plus synthetics (classes balanced), RDS a
// reduced balanced set, ORIG the input unchanged. k is silently capped at
// minority size - 1; cap events are appended to `log` when given.
Dataset apply_sampler(const SamplerConfig& config, const Dataset& train, Rng& rng,
                      std::vector<std::string>* log = nullptr);

}  // namespace sasyno
