#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dlpbench/core/dataset_io.hpp"
#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/parallel.hpp"
#include "dlpbench/harness/config.hpp"
#include "dlpbench/harness/datasets.hpp"
#include "dlpbench/harness/real_data.hpp"
#include "dlpbench/harness/records.hpp"
#include "dlpbench/harness/report.hpp"
#include "dlpbench/harness/stage1.hpp"
#include "dlpbench/harness/stage2.hpp"
#include "dlpbench/harness/sweeps.hpp"

namespace {

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> replicates;
    std::optional<std::string> out;
    std::optional<unsigned> threads;
};

dlpbench::ExperimentConfig resolve(const Overrides& o) {
    auto c = o.config.empty() ? dlpbench::ExperimentConfig{} : dlpbench::load_config(o.config);
    if (o.seed) c.seed = *o.seed;
    if (o.replicates) c.replicates = *o.replicates;
    if (o.out) c.out = *o.out;
    if (o.threads) c.threads = *o.threads;
    c.validate();
    dlpbench::set_default_threads(c.threads);
    return c;
}

void finish(const dlpbench::RunOutput& run, const dlpbench::ExperimentConfig& c, const std::string& command) {
    dlpbench::write_outputs(c.out, run, c, command);
    std::cout << command << ": " << run.records.size() << " records, " << run.figures.size()
              << " figure tables -> " << c.out.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark of clustering approaches for daily load profiles"};
    app.require_subcommand(1);
    Overrides o;
    app.add_option("--config", o.config, "TOML experiment configuration")->check(CLI::ExistingFile);
    app.add_option("--seed", o.seed, "Master seed");
    app.add_option("--replicates", o.replicates, "Datasets per scenario level")->check(CLI::PositiveNumber);
    app.add_option("--out", o.out, "Output directory");
    app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");

    auto* generate = app.add_subcommand("generate", "Write the [generate] scenario's datasets as CSV");
    auto* stage1 = app.add_subcommand("stage1", "1NN accuracies on balanced baseline datasets");
    auto* stage2 = app.add_subcommand("stage2", "Clustering approaches on baseline datasets");
    auto* sweep = app.add_subcommand("sweep", "Vary one dataset property");
    std::string sweep_kind;
    sweep->add_option("kind", sweep_kind, "noise, size, kcount, balance, outliers, separation or emulate")
        ->required();
    auto* validate = app.add_subcommand("validate", "Correlate synthetic and real clustering performance");
    std::string real_csv;
    validate->add_option("real", real_csv, "Labelled dataset CSV")->required()->check(CLI::ExistingFile);
    auto* report = app.add_subcommand("report", "Mean scores, ranks and cliques from results.csv");
    std::string report_in;
    report->add_option("--in", report_in, "results.csv to summarise (default <out>/results.csv)");

    for (auto* sub : {generate, stage1, stage2, sweep, validate, report}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const auto c = resolve(o);
        if (*generate) {
            dlpbench::RunOutput run;
            const auto datasets =
                dlpbench::build_replicates(c.generate, c.seed, c.replicates, c.threads, &run.seeds);
            const auto stem = dlpbench::table_stem(c.generate.name());
            for (std::size_t r = 0; r < datasets.size(); ++r) {
                dlpbench::write_dataset(c.out / "datasets" / (stem + "_" + std::to_string(r) + ".csv"), datasets[r]);
            }
            finish(run, c, "generate");
        } else if (*stage1) {
            finish(dlpbench::run_stage1(c), c, "stage1");
        } else if (*stage2) {
            finish(dlpbench::run_stage2(c), c, "stage2");
        } else if (*sweep) {
            if (sweep_kind == "emulate") {
                auto result = dlpbench::emulate_consistency(c);
                finish(result.output, c, "sweep emulate");
                std::cout << "batch Spearman rho " << result.spearman.statistic << "\n";
            } else {
                const auto kind = dlpbench::parse_sweep_kind(sweep_kind);
                finish(dlpbench::run_sweep(kind, c), c, "sweep " + sweep_kind);
            }
        } else if (*validate) {
            finish(dlpbench::run_validation(real_csv, c), c, "validate");
        } else if (*report) {
            const std::filesystem::path in = report_in.empty() ? c.out / "results.csv" : std::filesystem::path(report_in);
            const auto records = dlpbench::read_results(in);
            const auto tables = dlpbench::report_figures(records);
            for (const auto& t : tables) dlpbench::write_figure(c.out / "figures_data", t);
            std::cout << "report: " << tables.size() << " tables from " << records.size() << " records -> "
                      << (c.out / "figures_data").string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
