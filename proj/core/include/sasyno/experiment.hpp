#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sasyno/csv.hpp"
#include "sasyno/dataset.hpp"
#include "sasyno/metrics.hpp"
#include "sasyno/rng.hpp"
#include "sasyno/samplers.hpp"

namespace sasyno {

// Synthetic two-blob dataset description, the stand-in for a CSV source.
struct GeneratorSpec {
    std::size_t n0 = 50;
    std::size_t n1 = 950;
    std::vector<double> center0;
    std::vector<double> center1;
    double spread0 = 1.0;
    double spread1 = 1.0;
};

struct ExperimentConfig {
    // Exactly one dataset source: a CSV file or a generator spec.
    std::optional<std::filesystem::path> dataset_path;
    LabelColumn label_column = LabelColumn::last();
    std::optional<GeneratorSpec> generator;

    // A pre-split test file disables splitting; the dataset file is then the
    // whole training set.
    std::optional<std::filesystem::path> pre_split_test;
    double train_fraction = 0.8;
    bool resplit = true;  // fresh split per replicate vs one shared split

    std::vector<SamplerConfig> samplers;
    std::size_t sampler_k = 5;

    std::string classifier_kind = "knn";
    std::size_t classifier_k = 1;

    std::size_t replicates = 10;
    std::uint64_t master_seed = 0;
    bool normalize = false;
    std::filesystem::path report_dir = "reports";
};

// Plain-text key=value configuration ('#' starts a comment). Keys:
//   dataset.path, dataset.label_column,
//   dataset.generator (gaussian), dataset.n0, dataset.n1,
//   dataset.center0, dataset.center1, dataset.spread0, dataset.spread1,
//   split.fraction, split.pre_split_test, split.resplit,
//   samplers, sampler.k, classifier.kind, classifier.k,
//   replicates, seed, normalize, report.dir
// Unknown keys and malformed values are errors naming the line.
ExperimentConfig parse_config(std::istream& in, const std::string& origin = "<config>");
ExperimentConfig parse_config_file(const std::filesystem::path& path);

// Throws when the configuration cannot be run (no source, no samplers, ...).
void validate(const ExperimentConfig& config);

struct ReplicateResult {
    MetricSet metrics;
    double seconds = 0.0;  // wall clock, excluded from determinism contracts
};

struct ExperimentReport {
    std::vector<std::string> sampler_names;
    std::vector<std::vector<ReplicateResult>> results;  // [sampler][replicate]
    std::vector<MetricSet> means;                       // [sampler]
    RankTable ranks;                                    // over sampler means
    std::vector<std::string> warnings;                  // e.g. k-capping events
    std::uint64_t master_seed = 0;
    std::size_t replicates = 0;
};

// Runs the full Monte Carlo protocol: per replicate, split (honoring
// resplit / pre-split), optionally min-max normalize on the training side,
// then resample - fit - predict - score per sampler. Every random stream is
// derived from (master_seed, replicate, sampler), so results are
// reproducible and extending the sampler list never disturbs existing
// streams.
ExperimentReport run_experiment(const ExperimentConfig& config);

// Emits report.csv (long format: sampler,replicate,metric,value),
// report_table.txt (means with ranks, one rank line under each value line)
// and timings.txt into config.report_dir. Only timings.txt depends on wall
// clock.
void write_report(const ExperimentReport& report, const ExperimentConfig& config);

void write_report_csv(const ExperimentReport& report, const std::filesystem::path& path);
std::string format_report_table(const ExperimentReport& report);

// Acceptance thresholds for the disturbance coverage check. The capsule
// default is the two-dimensional bound; pass a looser value for other
// dimensionalities.
struct CoverageTolerances {
    double two_sigma_target = 0.9545;
    double two_sigma_tol = 0.005;
    double three_sigma_target = 0.9973;
    double three_sigma_tol = 0.002;
    double capsule_min = 0.988;
};

struct CoverageReport {
    std::vector<double> two_sigma;    // per-dimension fraction |g| <= 2 sigma
    std::vector<double> three_sigma;  // per-dimension fraction |g| <= 3 sigma
    double capsule = 0.0;             // synthetics inside the 3-sigma box
    std::size_t draws = 0;
    CoverageTolerances tolerances;
    bool pass = false;

    std::string summary() const;
};

// Empirically checks the disturbance distribution: per-dimension Gaussian
// tail coverage at 2 and 3 sigma over n_draws draws, and the fraction of
// synthetics (from the fixed pair p = 0, q = 1 in every dimension) landing
// in the pair's bounding box expanded by 3 sigma per dimension. Dimensions
// with sigma = 0 pass trivially. n_draws must be at least 10^4.
CoverageReport validate_disturbance(std::size_t dims, const std::vector<double>& sigma,
                                    std::size_t n_draws, Rng& rng,
                                    const CoverageTolerances& tolerances = {});

}  // namespace sasyno
