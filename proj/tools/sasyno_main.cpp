// Command-line front end: oversampling, Monte Carlo evaluation, synthetic
// data generation and the disturbance coverage check.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sasyno/csv.hpp"
#include "sasyno/dataset.hpp"
#include "sasyno/experiment.hpp"
#include "sasyno/rng.hpp"
#include "sasyno/samplers.hpp"

namespace {

using namespace sasyno;

int run_oversample(const std::string& input, const std::string& output,
                   const std::string& sampler, const std::string& label_column,
                   std::size_t k, std::uint64_t seed, bool normalize) {
    CsvTable table = read_csv(input, LabelColumn::parse(label_column));
    Dataset data = std::move(table.data);
    if (normalize) {
        data = minmax_normalize(data).first;
    }

    SamplerConfig config;
    config.kind = sampler_kind_from_string(sampler);
    config.k_neighbors = k;
    config.seed = seed;

    Rng rng(seed);
    std::vector<std::string> log;
    const Dataset balanced = apply_sampler(config, data, rng, &log);
    for (const std::string& entry : log) {
        std::cerr << "warning: " << entry << '\n';
    }

    write_csv(output, balanced, table.header, table.label_col);
    std::cout << "wrote " << balanced.size() << " rows to " << output << '\n';
    return 0;
}

int run_evaluate(const std::string& config_path, std::optional<std::uint64_t> seed) {
    ExperimentConfig config = parse_config_file(config_path);
    if (seed) {
        config.master_seed = *seed;
    }
    const ExperimentReport report = run_experiment(config);
    write_report(report, config);
    std::cout << format_report_table(report);
    std::cout << "report files in " << config.report_dir.string() << '\n';
    return 0;
}

int run_gen_data(const std::string& output, std::size_t n0, std::size_t n1, std::size_t dims,
                 std::vector<double> center0, std::vector<double> center1, double spread0,
                 double spread1, std::uint64_t seed) {
    if (center0.empty()) center0.assign(dims, 0.0);
    if (center1.empty()) center1.assign(dims, 2.0);

    Rng rng(seed);
    const Dataset data =
        generate_gaussian_imbalanced(n0, n1, center0, center1, spread0, spread1, rng);

    std::vector<std::string> header;
    for (std::size_t l = 0; l < data.dimensionality(); ++l) {
        header.push_back("x" + std::to_string(l + 1));
    }
    header.push_back("label");
    write_csv(output, data, header, data.dimensionality());
    std::cout << "wrote " << data.size() << " rows to " << output << '\n';
    return 0;
}

int run_validate_fig1(std::size_t dims, std::size_t draws, std::vector<double> sigma,
                      std::uint64_t seed, double capsule_min) {
    if (sigma.empty()) sigma.assign(dims, 1.0);
    CoverageTolerances tolerances;
    tolerances.capsule_min = capsule_min;

    Rng rng(seed);
    const CoverageReport report = validate_disturbance(dims, sigma, draws, rng, tolerances);
    std::cout << report.summary();
    return report.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SASYNO self-adaptive synthetic over-sampling toolkit"};
    app.require_subcommand(1);

    // oversample
    std::string in_path, out_path;
    std::string sampler = "sasyno";
    std::string label_column = "last";
    std::size_t k = 5;
    std::uint64_t seed = 0;
    bool normalize = false;
    auto* over = app.add_subcommand("oversample", "balance a CSV dataset with a sampler");
    over->add_option("--input", in_path, "input CSV")->required();
    over->add_option("--output", out_path, "output CSV")->required();
    over->add_option("--sampler", sampler,
                     "sasyno | smote | adasyn | blsmote | slsmote | rds | orig");
    over->add_option("--label-column", label_column, "label column: 'last', index or name");
    over->add_option("--k", k, "neighbor count for the SMOTE family");
    over->add_option("--seed", seed, "random seed");
    over->add_flag("--normalize", normalize, "min-max rescale features before sampling");

    // evaluate
    std::string config_path;
    std::optional<std::uint64_t> seed_override;
    auto* eval = app.add_subcommand("evaluate", "run a Monte Carlo comparison experiment");
    eval->add_option("--config", config_path, "experiment config file")->required();
    eval->add_option("--seed", seed_override, "override the config master seed");

    // gen-data
    std::string gen_out;
    std::size_t n0 = 50, n1 = 950, dims = 2;
    std::vector<double> center0, center1;
    double spread0 = 1.0, spread1 = 1.0;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen-data", "generate an imbalanced two-Gaussian CSV");
    gen->add_option("--output", gen_out, "output CSV")->required();
    gen->add_option("--n0", n0, "minority count");
    gen->add_option("--n1", n1, "majority count");
    gen->add_option("--dims", dims, "dimensionality");
    gen->add_option("--center0", center0, "minority center (default all 0)")->delimiter(',');
    gen->add_option("--center1", center1, "majority center (default all 2)")->delimiter(',');
    gen->add_option("--spread0", spread0, "minority standard deviation");
    gen->add_option("--spread1", spread1, "majority standard deviation");
    gen->add_option("--seed", gen_seed, "random seed");

    // validate-fig1
    std::size_t v_dims = 2, v_draws = 100000;
    std::vector<double> v_sigma;
    std::uint64_t v_seed = 0;
    double capsule_min = 0.988;
    auto* val = app.add_subcommand("validate-fig1",
                                   "check disturbance coverage statistics empirically");
    val->add_option("--dims", v_dims, "dimensionality");
    val->add_option("--draws", v_draws, "number of draws (>= 10000)");
    val->add_option("--sigma", v_sigma, "per-dimension sigma (default all 1)")->delimiter(',');
    val->add_option("--seed", v_seed, "random seed");
    val->add_option("--capsule-min", capsule_min,
                    "minimum box coverage (default is the 2-D bound)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (over->parsed()) {
            return run_oversample(in_path, out_path, sampler, label_column, k, seed, normalize);
        }
        if (eval->parsed()) {
            return run_evaluate(config_path, seed_override);
        }
        if (gen->parsed()) {
            return run_gen_data(gen_out, n0, n1, dims, center0, center1, spread0, spread1,
                                gen_seed);
        }
        if (val->parsed()) {
            return run_validate_fig1(v_dims, v_draws, v_sigma, v_seed, capsule_min);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
