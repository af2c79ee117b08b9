#include "sasyno/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sasyno/classifier.hpp"
#include "sasyno/sasyno.hpp"

namespace sasyno {

namespace {

// Stream domains hanging off the master seed.
constexpr std::uint64_t kGeneratorStream = 1;
constexpr std::uint64_t kSplitStream = 2;
constexpr std::uint64_t kSamplerStream = 3;

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double_value(const std::string& text) {
    double v;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw std::runtime_error("not a number: '" + text + "'");
    }
    return v;
}

std::uint64_t parse_u64_value(const std::string& text) {
    std::uint64_t v;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, v);
    if (ec != std::errc() || ptr != last) {
        throw std::runtime_error("not a nonnegative integer: '" + text + "'");
    }
    return v;
}

std::size_t parse_size_value(const std::string& text) {
    return static_cast<std::size_t>(parse_u64_value(text));
}

bool parse_bool_value(const std::string& text) {
    if (text == "true") return true;
    if (text == "false") return false;
    throw std::runtime_error("expected true or false, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            const std::string item = trim(text.substr(start));
            if (!item.empty()) items.push_back(item);
            break;
        }
        const std::string item = trim(text.substr(start, comma - start));
        if (!item.empty()) items.push_back(item);
        start = comma + 1;
    }
    return items;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    for (const std::string& item : split_list(text)) {
        out.push_back(parse_double_value(item));
    }
    return out;
}

GeneratorSpec& generator_of(ExperimentConfig& cfg) {
    if (!cfg.generator) cfg.generator = GeneratorSpec{};
    return *cfg.generator;
}

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in, const std::string& origin) {
    ExperimentConfig cfg;
    bool samplers_given = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << origin << ":" << line_no << ": expected key = value, got '" << line << "'";
            throw std::runtime_error(msg.str());
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        try {
            if (key == "dataset.path") {
                cfg.dataset_path = value;
            } else if (key == "dataset.label_column") {
                cfg.label_column = LabelColumn::parse(value);
            } else if (key == "dataset.generator") {
                if (value != "gaussian") {
                    throw std::runtime_error("unknown generator '" + value +
                                             "', available: {gaussian}");
                }
                generator_of(cfg);
            } else if (key == "dataset.n0") {
                generator_of(cfg).n0 = parse_size_value(value);
            } else if (key == "dataset.n1") {
                generator_of(cfg).n1 = parse_size_value(value);
            } else if (key == "dataset.center0") {
                generator_of(cfg).center0 = parse_double_list(value);
            } else if (key == "dataset.center1") {
                generator_of(cfg).center1 = parse_double_list(value);
            } else if (key == "dataset.spread0") {
                generator_of(cfg).spread0 = parse_double_value(value);
            } else if (key == "dataset.spread1") {
                generator_of(cfg).spread1 = parse_double_value(value);
            } else if (key == "split.fraction") {
                cfg.train_fraction = parse_double_value(value);
            } else if (key == "split.pre_split_test") {
                cfg.pre_split_test = value;
            } else if (key == "split.resplit") {
                cfg.resplit = parse_bool_value(value);
            } else if (key == "samplers") {
                cfg.samplers.clear();
                for (const std::string& item : split_list(value)) {
                    cfg.samplers.push_back(SamplerConfig{sampler_kind_from_string(item)});
                }
                samplers_given = true;
            } else if (key == "sampler.k") {
                cfg.sampler_k = parse_size_value(value);
            } else if (key == "classifier.kind") {
                cfg.classifier_kind = value;
            } else if (key == "classifier.k") {
                cfg.classifier_k = parse_size_value(value);
            } else if (key == "replicates") {
                cfg.replicates = parse_size_value(value);
            } else if (key == "seed") {
                cfg.master_seed = parse_u64_value(value);
            } else if (key == "normalize") {
                cfg.normalize = parse_bool_value(value);
            } else if (key == "report.dir") {
                cfg.report_dir = value;
            } else {
                throw std::runtime_error("unknown key '" + key + "'");
            }
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << origin << ":" << line_no << ": " << e.what();
            throw std::runtime_error(msg.str());
        }
    }

    if (!samplers_given) {
        for (SamplerKind kind : all_sampler_kinds()) {
            cfg.samplers.push_back(SamplerConfig{kind});
        }
    }
    for (SamplerConfig& s : cfg.samplers) {
        s.k_neighbors = cfg.sampler_k;
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path.string());
    }
    return parse_config(in, path.string());
}

void validate(const ExperimentConfig& config) {
    if (config.dataset_path.has_value() == config.generator.has_value()) {
        throw std::invalid_argument(
            "config: exactly one dataset source required (dataset.path or dataset.generator)");
    }
    if (config.generator) {
        const GeneratorSpec& g = *config.generator;
        if (g.center0.empty() || g.center0.size() != g.center1.size()) {
            throw std::invalid_argument(
                "config: dataset.center0 and dataset.center1 must be nonempty and equally sized");
        }
        if (g.n0 < 1 || g.n1 < 1) {
            throw std::invalid_argument("config: dataset.n0 and dataset.n1 must be >= 1");
        }
        if (g.spread0 < 0.0 || g.spread1 < 0.0) {
            throw std::invalid_argument("config: spreads must be nonnegative");
        }
    }
    if (config.pre_split_test && !config.dataset_path) {
        throw std::invalid_argument("config: split.pre_split_test requires dataset.path");
    }
    if (!(config.train_fraction > 0.0 && config.train_fraction < 1.0)) {
        throw std::invalid_argument("config: split.fraction must lie in (0, 1)");
    }
    if (config.samplers.empty()) {
        throw std::invalid_argument("config: at least one sampler required");
    }
    if (config.replicates < 1) {
        throw std::invalid_argument("config: replicates must be >= 1");
    }
    if (config.sampler_k < 1 || config.classifier_k < 1) {
        throw std::invalid_argument("config: neighbor counts must be >= 1");
    }
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    validate(config);

    Dataset full;
    if (config.dataset_path) {
        try {
            full = load_csv(*config.dataset_path, config.label_column);
        } catch (const std::exception& e) {
            throw std::runtime_error("dataset '" + config.dataset_path->string() +
                                     "': " + e.what());
        }
    } else {
        const GeneratorSpec& g = *config.generator;
        Rng rng(derive_seed(config.master_seed, {kGeneratorStream}));
        full = generate_gaussian_imbalanced(g.n0, g.n1, g.center0, g.center1, g.spread0,
                                            g.spread1, rng);
    }

    std::optional<Dataset> pre_test;
    if (config.pre_split_test) {
        try {
            pre_test = load_csv(*config.pre_split_test, config.label_column);
        } catch (const std::exception& e) {
            throw std::runtime_error("test set '" + config.pre_split_test->string() +
                                     "': " + e.what());
        }
    }

    const ClassPartition roles = partition_by_class(full);

    ExperimentReport report;
    report.master_seed = config.master_seed;
    report.replicates = config.replicates;
    for (const SamplerConfig& s : config.samplers) {
        report.sampler_names.push_back(to_string(s.kind));
    }
    report.results.assign(config.samplers.size(), {});
    for (auto& row : report.results) row.resize(config.replicates);

    for (std::size_t r = 0; r < config.replicates; ++r) {
        Dataset train;
        Dataset test;
        if (pre_test) {
            train = full;
            test = *pre_test;
        } else {
            const std::uint64_t split_index = config.resplit ? r : 0;
            Rng split_rng(derive_seed(config.master_seed, {kSplitStream, split_index}));
            TrainTestSplit split = train_test_split(full, config.train_fraction, split_rng);
            train = std::move(split.train);
            test = std::move(split.test);
        }
        if (config.normalize) {
            auto [scaled, params] = minmax_normalize(train);
            train = std::move(scaled);
            test = params.apply(test);
        }

        std::vector<Label> truth;
        truth.reserve(test.size());
        for (const Sample& s : test) truth.push_back(s.label);

        for (std::size_t s = 0; s < config.samplers.size(); ++s) {
            Rng sampler_rng(derive_seed(config.master_seed, {kSamplerStream, r, s}));
            const auto start = std::chrono::steady_clock::now();

            const Dataset resampled =
                apply_sampler(config.samplers[s], train, sampler_rng, &report.warnings);
            auto classifier = make_classifier(config.classifier_kind, config.classifier_k,
                                              roles.minority_label);
            classifier->fit(resampled);
            const std::vector<Label> predicted = classifier->predict(test);
            const ConfusionMatrix cm =
                confusion_matrix(truth, predicted, roles.minority_label, roles.majority_label);

            const auto stop = std::chrono::steady_clock::now();
            report.results[s][r] = ReplicateResult{
                compute_metrics(cm), std::chrono::duration<double>(stop - start).count()};
        }
    }

    // Duplicate warnings from repeated replicates collapse to one line each.
    std::sort(report.warnings.begin(), report.warnings.end());
    report.warnings.erase(std::unique(report.warnings.begin(), report.warnings.end()),
                          report.warnings.end());

    report.means.resize(config.samplers.size());
    std::vector<std::vector<double>> values(kAllMeasures.size(),
                                            std::vector<double>(config.samplers.size()));
    for (std::size_t s = 0; s < config.samplers.size(); ++s) {
        MetricSet mean;
        for (const ReplicateResult& rr : report.results[s]) {
            mean.sn += rr.metrics.sn;
            mean.sp += rr.metrics.sp;
            mean.gm += rr.metrics.gm;
            mean.fm += rr.metrics.fm;
            mean.acc += rr.metrics.acc;
            mean.degenerate = mean.degenerate || rr.metrics.degenerate;
        }
        const double n = static_cast<double>(config.replicates);
        mean.sn /= n;
        mean.sp /= n;
        mean.gm /= n;
        mean.fm /= n;
        mean.acc /= n;
        report.means[s] = mean;
        for (std::size_t m = 0; m < kAllMeasures.size(); ++m) {
            values[m][s] = mean[kAllMeasures[m]];
        }
    }

    std::vector<std::string> measure_names;
    for (Measure m : kAllMeasures) measure_names.push_back(to_string(m));
    report.ranks = rank_table(report.sampler_names, measure_names, values,
                              std::vector<bool>(kAllMeasures.size(), true));
    return report;
}

void write_report_csv(const ExperimentReport& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write report: " + path.string());
    }
    out << "sampler,replicate,metric,value\n";
    for (std::size_t s = 0; s < report.sampler_names.size(); ++s) {
        for (std::size_t r = 0; r < report.results[s].size(); ++r) {
            for (Measure m : kAllMeasures) {
                out << report.sampler_names[s] << ',' << r << ',' << to_string(m) << ','
                    << format_double(report.results[s][r].metrics[m]) << '\n';
            }
        }
    }
}

std::string format_report_table(const ExperimentReport& report) {
    std::ostringstream out;
    std::size_t name_width = 8;
    for (const std::string& name : report.sampler_names) {
        name_width = std::max(name_width, name.size());
    }
    const int col = 9;

    out << std::left;
    out.width(static_cast<std::streamsize>(name_width));
    out << "sampler";
    out << std::right;
    for (Measure m : kAllMeasures) {
        out.width(col);
        out << to_string(m);
    }
    out.width(col);
    out << "AvgRank";
    out << '\n';

    for (std::size_t s = 0; s < report.sampler_names.size(); ++s) {
        out << std::left;
        out.width(static_cast<std::streamsize>(name_width));
        out << report.sampler_names[s];
        out << std::right;
        for (std::size_t m = 0; m < kAllMeasures.size(); ++m) {
            out.width(col);
            out << fixed4(report.means[s][kAllMeasures[m]]);
        }
        char avg[32];
        std::snprintf(avg, sizeof(avg), "%.2f", report.ranks.average[s]);
        out.width(col);
        out << avg;
        out << '\n';

        // rank line under each value line, as in the comparison tables
        out << std::left;
        out.width(static_cast<std::streamsize>(name_width));
        out << "";
        out << std::right;
        for (std::size_t m = 0; m < kAllMeasures.size(); ++m) {
            out.width(col);
            out << report.ranks.ranks[m][s];
        }
        out << '\n';
    }

    if (!report.warnings.empty()) {
        out << '\n';
        for (const std::string& w : report.warnings) {
            out << "warning: " << w << '\n';
        }
    }
    return out.str();
}

void write_report(const ExperimentReport& report, const ExperimentConfig& config) {
    std::filesystem::create_directories(config.report_dir);
    write_report_csv(report, config.report_dir / "report.csv");

    {
        std::ofstream table(config.report_dir / "report_table.txt", std::ios::binary);
        if (!table) {
            throw std::runtime_error("cannot write report table");
        }
        table << format_report_table(report);
    }

    std::ofstream timings(config.report_dir / "timings.txt", std::ios::binary);
    if (!timings) {
        throw std::runtime_error("cannot write timings");
    }
    timings << "sampler,replicate,seconds\n";
    for (std::size_t s = 0; s < report.sampler_names.size(); ++s) {
        for (std::size_t r = 0; r < report.results[s].size(); ++r) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", report.results[s][r].seconds);
            timings << report.sampler_names[s] << ',' << r << ',' << buf << '\n';
        }
    }
}

std::string CoverageReport::summary() const {
    std::ostringstream out;
    out << "draws: " << draws << '\n';
    for (std::size_t l = 0; l < two_sigma.size(); ++l) {
        out << "dim " << l << ": |g| <= 2s " << fixed4(two_sigma[l]) << "  (target "
            << fixed4(tolerances.two_sigma_target) << " +/- " << tolerances.two_sigma_tol
            << ")   |g| <= 3s " << fixed4(three_sigma[l]) << "  (target "
            << fixed4(tolerances.three_sigma_target) << " +/- " << tolerances.three_sigma_tol
            << ")\n";
    }
    out << "3-sigma box coverage: " << fixed4(capsule) << "  (min "
        << fixed4(tolerances.capsule_min) << ")\n";
    out << (pass ? "PASS" : "FAIL") << '\n';
    return out.str();
}

CoverageReport validate_disturbance(std::size_t dims, const std::vector<double>& sigma,
                                    std::size_t n_draws, Rng& rng,
                                    const CoverageTolerances& tolerances) {
    if (dims == 0 || sigma.size() != dims) {
        throw std::invalid_argument("validate_disturbance: need one sigma per dimension");
    }
    for (double s : sigma) {
        if (s < 0.0) {
            throw std::invalid_argument("validate_disturbance: sigma must be nonnegative");
        }
    }
    if (n_draws < 10000) {
        throw std::invalid_argument("validate_disturbance: need at least 10^4 draws");
    }

    CoverageReport report;
    report.draws = n_draws;
    report.tolerances = tolerances;
    std::vector<std::size_t> within2(dims, 0);
    std::vector<std::size_t> within3(dims, 0);
    for (std::size_t d = 0; d < n_draws; ++d) {
        for (std::size_t l = 0; l < dims; ++l) {
            const double g = std::fabs(rng.normal(sigma[l]));
            if (g <= 2.0 * sigma[l]) ++within2[l];
            if (g <= 3.0 * sigma[l]) ++within3[l];
        }
    }
    report.two_sigma.resize(dims);
    report.three_sigma.resize(dims);
    for (std::size_t l = 0; l < dims; ++l) {
        report.two_sigma[l] = static_cast<double>(within2[l]) / static_cast<double>(n_draws);
        report.three_sigma[l] = static_cast<double>(within3[l]) / static_cast<double>(n_draws);
    }

    // Synthetics from the fixed pair p = 0, q = 1 must concentrate in the
    // pair's bounding box expanded by 3 sigma per dimension.
    const std::vector<double> p(dims, 0.0);
    const std::vector<double> q(dims, 1.0);
    std::size_t inside = 0;
    for (std::size_t d = 0; d < n_draws; ++d) {
        auto [p_hat, q_hat] = gaussian_disturb(p, q, sigma, rng);
        const std::vector<double> s = interpolate(p_hat, q_hat, rng);
        bool ok = true;
        for (std::size_t l = 0; l < dims && ok; ++l) {
            ok = s[l] >= p[l] - 3.0 * sigma[l] && s[l] <= q[l] + 3.0 * sigma[l];
        }
        if (ok) ++inside;
    }
    report.capsule = static_cast<double>(inside) / static_cast<double>(n_draws);

    report.pass = report.capsule >= tolerances.capsule_min;
    for (std::size_t l = 0; l < dims && report.pass; ++l) {
        if (sigma[l] == 0.0) continue;  // degenerate dimension, trivially covered
        report.pass =
            std::fabs(report.two_sigma[l] - tolerances.two_sigma_target) <=
                tolerances.two_sigma_tol &&
            std::fabs(report.three_sigma[l] - tolerances.three_sigma_target) <=
                tolerances.three_sigma_tol;
    }
    return report;
}

}  // namespace sasyno
