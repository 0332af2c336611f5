#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "dlpbench/core/dataset_io.hpp"
#include "dlpbench/core/errors.hpp"
#include "dlpbench/evaluation/validity.hpp"
#include "dlpbench/harness/config.hpp"
#include "dlpbench/harness/datasets.hpp"
#include "dlpbench/harness/method_id.hpp"
#include "dlpbench/harness/real_data.hpp"
#include "dlpbench/harness/records.hpp"
#include "dlpbench/harness/report.hpp"
#include "dlpbench/harness/stage1.hpp"
#include "dlpbench/harness/stage2.hpp"
#include "dlpbench/harness/sweeps.hpp"
#include "dlpbench/stats/correlation.hpp"

using namespace dlpbench;
using Catch::Matchers::WithinAbs;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("dlpbench_harness_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.seed = 11;
    c.replicates = 2;
    c.threads = 1;
    c.stage1.n = 100;
    c.stage1.methods = {"ed"};
    c.stage2.n = 120;
    c.stage2.paradigms = {"ed"};
    c.stage2.algorithms = {"hac(ward)"};
    c.stage2.kmeans = false;
    c.stage2.kshape = false;
    c.stage2.metrics = {"ARI"};
    c.sweep.n = 100;
    return c;
}

std::size_t count_metric(const std::vector<ResultRecord>& records, const std::string& prefix) {
    std::size_t n = 0;
    for (const auto& r : records) n += r.metric.starts_with(prefix);
    return n;
}

// Three unrelated shapes (not shifts of one another) with tiny jitter: any algorithm given k = 3 recovers them.
LabeledDataset three_blobs() {
    LabeledDataset d;
    Rng rng(SeedSpec{3, "blobs", 0, 0});
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < 12; ++i) {
            std::vector<double> v(kDlpLength, 0.0);
            for (std::size_t t = 0; t < kDlpLength; ++t) {
                const double x = static_cast<double>(t);
                const double shape = c == 0   ? std::exp(-0.5 * std::pow((x - 24.0) / 2.0, 2))
                                     : c == 1 ? x / 47.0
                                              : std::sin(4.0 * M_PI * x / 48.0);
                v[t] = shape + 0.01 * rng.uniform();
            }
            const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
            const double a = *lo, b = *hi;
            for (auto& x : v) x = (x - a) / (b - a);
            d.series.emplace_back(std::move(v));
            d.labels.push_back(c);
        }
    }
    d.meta.scenario = "blobs";
    d.meta.num_clusters = 3;
    return d;
}

}  // namespace

TEST_CASE("paradigm ids round-trip and split into family and params", "[method_id]") {
    for (const char* id : {"dtw(w=3)", "erp(w=2,g=0.1)", "ed", "sbd", "pca(nc=10)", "mm(p=3)",
                           "sax(nb=6,bins=normal,dist=vlev)"}) {
        const auto p = Paradigm::parse(id);
        CHECK(Paradigm::parse(p.id()) == p);
    }
    CHECK(Paradigm::parse("dtw(w=3)").family() == "dtw");
    CHECK(Paradigm::parse("dtw(w=3)").params() == "w=3");
    CHECK(Paradigm::parse("ed").params().empty());
    CHECK_THROWS_AS(Paradigm::parse("dtw(w=0)"), InvalidParameter);
    CHECK_THROWS_AS(Paradigm::parse("nonsense"), ParseError);
}

TEST_CASE("approach ids join paradigm and algorithm", "[method_id]") {
    CHECK(approach_id("dtw(w=3)", AlgoSpec::parse("hac(ward)")) == "dtw(w=3)+hac(ward)");
    CHECK(approach_id("dtw(w=3)", AlgoSpec::parse("kmeans")) == "kmeans");
    CHECK(split_approach_id("dtw(w=3)+hac(ward)") == std::pair<std::string, std::string>{"dtw(w=3)", "hac(ward)"});
    CHECK(split_approach_id("kshape") == std::pair<std::string, std::string>{"raw", "kshape"});
}

TEST_CASE("retained grids match the stage-two parameter subsets", "[method_id]") {
    const std::map<std::string, std::size_t> sizes = {{"cid", 1}, {"dtw", 6}, {"erp", 20}, {"ed", 1},
                                                      {"fd", 1},  {"ksd", 3}, {"mpd", 7},  {"mm_3", 1},
                                                      {"msm", 6}, {"pca", 10}, {"sbd", 1}, {"twed", 9}};
    REQUIRE(retained_method_names().size() == 12);
    for (const auto& name : retained_method_names()) {
        INFO(name);
        CHECK(method_family(name, GridMode::Retained).members.size() == sizes.at(name));
    }
    const auto dtw = method_family("dtw", GridMode::Retained);
    CHECK(dtw.report_id() == "dtw_exp");
    for (std::size_t i = 0; i < 6; ++i) CHECK(dtw.members[i].measure.w == static_cast<int>(i) + 1);
    CHECK(method_family("mpd", GridMode::Retained).members.front().measure.w == 41);
    CHECK(method_family("msm", GridMode::Retained).members.front().measure.c == 0.1);
    CHECK(method_family("sbd", GridMode::Retained).report_id() == "sbd");
    CHECK(method_family("mm_3", GridMode::Retained).report_id() == "mm(p=3)");
}

TEST_CASE("default and full grids", "[method_id]") {
    CHECK(stage1_method_names().size() == 36);
    const std::set<std::string> unique(stage1_method_names().begin(), stage1_method_names().end());
    CHECK(unique.size() == 36);
    CHECK(method_family("dtw", GridMode::Default).members.front().id() == "dtw(w=48)");
    CHECK(method_family("ksd", GridMode::Default).members.front().measure.w == 5);
    const auto full = method_family("dtw", GridMode::Full);
    REQUIRE(full.members.size() == 48);
    CHECK(full.members.back().measure.w == 48);
    CHECK(method_family("paa", GridMode::Full).members.size() == 24);
    CHECK(method_family("pca", GridMode::Full).members.size() == 48);
    CHECK(method_family("mpd", GridMode::Full).members.size() == 46);
    CHECK(method_family("twed", GridMode::Full).members.size() == 30);
    CHECK(method_family("erp", GridMode::Full).members.size() == 48 * 11);
    CHECK(method_family("sax_lev", GridMode::Full).members.size() == 25 * 3);
    CHECK(method_family("dtw(w=3)", GridMode::Full).members.size() == 1);
    CHECK_THROWS_AS(parse_grid_mode("best"), ConfigError);
}

TEST_CASE("config parses TOML, rejects unknown keys and hashes results-relevant fields only", "[config]") {
    const auto c = parse_config(R"toml(
seed = 5
replicates = 3
threads = 2
out = "x"
[stage1]
mode = "full"
methods = ["dtw", "ksd"]
[stage2]
paradigms = ["dtw", "sbd"]
algorithms = ["hac(ward)", "kmedoids"]
kshape = false
[sweep]
levels = [0.05, 0.1]
axis = "magnitude"
)toml");
    CHECK(c.seed == 5);
    CHECK(c.replicates == 3);
    CHECK(c.stage1.mode == GridMode::Full);
    CHECK(c.stage1.methods == std::vector<std::string>{"dtw", "ksd"});
    CHECK(c.stage2.algorithms.size() == 2);
    CHECK_FALSE(c.stage2.kshape);
    CHECK(c.sweep.levels == std::vector<double>{0.05, 0.1});
    CHECK(c.sweep.axis == SeparationAxis::Magnitude);

    auto d = c;
    d.threads = 7;
    d.out = "elsewhere";
    CHECK(d.hash() == c.hash());
    d.seed = 6;
    CHECK(d.hash() != c.hash());

    CHECK_THROWS_AS(parse_config("sed = 1"), ConfigError);
    CHECK_THROWS_AS(parse_config("[stage2]\nparadigms = [\"dtww\"]"), ConfigError);
    CHECK_THROWS_AS(parse_config("[stage2]\nalgorithms = [\"kmeans\"]"), ConfigError);
    CHECK_THROWS_AS(parse_config("replicates = 0"), ConfigError);
    CHECK_THROWS_AS(parse_config("[stage1]\nmethods = []"), ConfigError);
    CHECK_THROWS_AS(parse_config("[stage2]\nparadigms = []\nkmeans = false\nkshape = false"), ConfigError);
    CHECK_NOTHROW(parse_config("[stage2]\nparadigms = []\nkshape = false"));
    CHECK_THROWS_AS(parse_config("seed = ["), ConfigError);
    CHECK_NOTHROW(ExperimentConfig{}.validate());
}

TEST_CASE("results CSV round-trips, quoting ids that contain commas", "[records]") {
    const std::vector<ResultRecord> records = {
        {"baseline(n=200,equal)", 0, "erp(w=2,g=0.1)", "w=2,g=0.1", "acc_overall", 0.9375},
        {"baseline(n=200,equal)", 0, "erp(w=2,g=0.1)", "w=2,g=0.1", "acc_cluster_17", 1.0},
        {"noise(sigma=0.1)", 4, "dtw_exp+hac(ward)", "members=6", "ARI", 0.1 + 0.2},
        {"x", 1, "say \"hi\"", "", "PSI", -0.0},
    };
    const auto dir = temp_dir("records");
    write_results(dir / "results.csv", records);
    CHECK(read_results(dir / "results.csv") == records);
    CHECK(split_csv_line(R"(a,"b,c","d""e",)") == std::vector<std::string>{"a", "b,c", "d\"e", ""});

    auto bad = records.front();
    bad.metric = "accuracy";
    CHECK_THROWS_AS(results_csv({bad}), InvariantViolation);
    bad = records.front();
    bad.value = std::nan("");
    CHECK_THROWS_AS(results_csv({bad}), InvariantViolation);

    std::ofstream(dir / "broken.csv") << "scenario,dataset_index,method_id,params,metric,value\nb,0,ed,,ARI,1\nb,zero,ed,,ARI,1\n";
    CHECK_THROWS_WITH(read_results(dir / "broken.csv"), Catch::Matchers::ContainsSubstring("line 3"));
}

TEST_CASE("stage one: 2 datasets x ED gives 2 overall and 40 per-cluster records", "[stage1]") {
    auto c = small_config();
    const auto out = run_stage1(c);
    CHECK(count_metric(out.records, "acc_overall") == 2);
    CHECK(count_metric(out.records, "acc_cluster_") == 40);
    CHECK(out.seeds.size() == 2);
    for (const auto& r : out.records) {
        CHECK(r.scenario == "baseline(n=100,equal)");
        CHECK(r.method_id == "ed");
    }
}

TEST_CASE("stage one grid mode DTW gives one record per window per dataset", "[stage1]") {
    auto c = small_config();
    c.replicates = 1;
    c.stage1.n = 40;
    c.stage1.mode = GridMode::Full;
    c.stage1.methods = {"dtw"};
    const auto out = run_stage1(c);
    std::set<std::string> ids;
    for (const auto& r : out.records) {
        if (r.metric == "acc_overall") ids.insert(r.method_id);
    }
    CHECK(ids.size() == 48);
    CHECK(count_metric(out.records, "acc_overall") == 48);
}

TEST_CASE("stage one reruns are byte-identical at every thread count", "[stage1][determinism]") {
    auto c = small_config();
    c.stage1.methods = {"ed", "dtw", "sbd", "pca"};
    c.stage1.mode = GridMode::Retained;
    const auto a = results_csv(run_stage1(c).records);
    c.threads = 3;
    CHECK(results_csv(run_stage1(c).records) == a);
    c.threads = 1;
    CHECK(results_csv(run_stage1(c).records) == a);
}

TEST_CASE("stage two X_exp is the per-dataset mean over the retained grid", "[stage2]") {
    auto c = small_config();
    c.replicates = 1;
    c.stage2.paradigms = {"dtw"};
    c.stage2.members = true;
    const auto out = run_stage2(c);
    double exp_value = -1.0, sum = 0.0;
    int members = 0;
    for (const auto& r : out.records) {
        if (r.method_id == "dtw_exp+hac(ward)") exp_value = r.value;
        if (r.method_id.starts_with("dtw(w=")) {
            sum += r.value;
            ++members;
        }
    }
    REQUIRE(members == 6);
    CHECK_THAT(exp_value, WithinAbs(sum / 6.0, 1e-12));
}

TEST_CASE("stage two passes the true cluster count to every algorithm", "[stage2]") {
    Stage2Plan plan;
    plan.families = {method_family("ed", GridMode::Default), method_family("sbd", GridMode::Default)};
    for (const auto& a : paradigm_algorithms()) plan.algorithms.push_back(a);
    plan.metrics = {"ARI", "NVD1m"};
    const auto records = score_clustering({three_blobs()}, plan, 1, 1);
    CHECK(records.size() == (2 * 9 + 2) * 2);
    for (const auto& r : records) {
        INFO(r.method_id << " " << r.metric);
        CHECK_THAT(r.value, WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("stage two is byte-identical at every thread count", "[stage2][determinism]") {
    auto c = small_config();
    c.stage2.paradigms = {"ed", "dtw", "pca"};
    c.stage2.algorithms = {"hac(ward)", "kmedoids", "birch", "spectral", "genie"};
    c.stage2.kmeans = true;
    c.stage2.metrics = {"ARI", "AMI", "NVD1m", "PSI"};
    const auto a = results_csv(run_stage2(c).records);
    c.threads = 4;
    CHECK(results_csv(run_stage2(c).records) == a);
}

TEST_CASE("outlier scoring ignores series labelled -1", "[stage2]") {
    const std::vector<int> truth = {0, 0, 1, 1, -1, -1, 2, 2};
    const std::vector<int> assigned = {1, 1, 0, 0, 2, 0, 2, 2};
    const std::vector<int> t = {0, 0, 1, 1, 2, 2};
    const std::vector<int> a = {1, 1, 0, 0, 2, 2};
    for (const char* m : {"ARI", "AMI", "NVD1m", "PSI"}) {
        CHECK(score_partition(m, truth, assigned) == score_partition(m, t, a));
        CHECK_THAT(score_partition(m, truth, assigned), WithinAbs(1.0, 1e-12));
    }
    CHECK_THROWS_AS(score_partition("F1", t, a), ConfigError);

    auto c = small_config();
    c.replicates = 1;
    c.sweep.n = 60;
    c.sweep.levels = {0, 25};
    const auto out = run_sweep(SweepKind::Outliers, c);
    REQUIRE(out.records.size() == 2);
    CHECK(out.records[0].scenario == "outliers(n_o=0)");
    CHECK(out.records[1].scenario == "outliers(n_o=25)");
}

TEST_CASE("noise sweep gives 7 levels x replicates records", "[sweeps]") {
    auto c = small_config();
    c.replicates = 2;
    const auto out = run_sweep(SweepKind::Noise, c);
    CHECK(out.records.size() == 7 * 2);
    std::set<std::string> scenarios;
    for (const auto& r : out.records) scenarios.insert(r.scenario);
    CHECK(scenarios.size() == 7);
    REQUIRE(out.figures.size() == 1);
    CHECK(out.figures[0].name == "sweep_noise");
    CHECK(out.figures[0].rows.size() == 7);
    CHECK(out.figures[0].rows.front()[1] == "0.05");
    CHECK(out.figures[0].rows.back()[1] == "0.35");
}

TEST_CASE("sweep scenarios follow the scenario grids", "[sweeps]") {
    ExperimentConfig c;
    CHECK(sweep_scenarios(SweepKind::Size, c).size() == 4);
    CHECK(sweep_scenarios(SweepKind::KCount, c).front().k_star == 8);
    CHECK(sweep_scenarios(SweepKind::Balance, c).size() == 3);
    CHECK(sweep_scenarios(SweepKind::Outliers, c).size() == 7);
    CHECK(sweep_scenarios(SweepKind::Separation, c).size() == timing_levels().size());
    c.sweep.levels = {2.5};
    CHECK_THROWS_AS(sweep_scenarios(SweepKind::KCount, c), ConfigError);
    CHECK_THROWS_AS(parse_sweep_kind("width"), ConfigError);
    for (const char* k : {"noise", "size", "kcount", "balance", "outliers", "separation"}) {
        CHECK(sweep_kind_name(parse_sweep_kind(k)) == k);
    }
}

TEST_CASE("convergence level is the first level whose mean accuracy exceeds 0.99", "[sweeps]") {
    CHECK(convergence_level({0, 1, 2, 3}, {0.5, 0.99, 0.995, 1.0}) == 2.0);
    CHECK_FALSE(convergence_level({0, 1}, {0.5, 0.99}).has_value());
    CHECK(convergence_level({5, 4}, {1.0, 1.0}) == 5.0);
    CHECK_THROWS_AS(convergence_level({0, 1}, {0.5}), LengthMismatch);
}

TEST_CASE("separation sweep emits accuracy curves and convergence levels", "[sweeps]") {
    auto c = small_config();
    c.replicates = 3;
    c.sweep.levels = {0.0, 5.0};
    c.sweep.separation_methods = {"ed", "dtw(w=1)"};
    const auto out = run_sweep(SweepKind::Separation, c);
    CHECK(count_metric(out.records, "acc_overall") == 2 * 3 * 2);
    REQUIRE(out.figures.size() == 2);
    CHECK(out.figures[0].name == "sweep_separation_timing");
    const auto& conv = out.figures[1];
    CHECK(conv.name == "separation_timing_convergence");
    REQUIRE(conv.rows.size() == 2);
    for (const auto& row : conv.rows) CHECK(row[2] == "5");
}

TEST_CASE("labelled CSV round-trips and validates its sidecar histogram", "[real_data]") {
    const auto dir = temp_dir("real");
    ScenarioSpec spec;
    spec.kind = ScenarioKind::EmulateReal;
    const auto data = build_scenario(spec, SeedSpec{9, "emulate_real", 0, 0});
    write_dataset(dir / "emulated.csv", data);
    const auto loaded = load_labeled_csv(dir / "emulated.csv");
    CHECK(loaded.series == data.series);
    CHECK(loaded.labels == data.labels);
    CHECK(loaded.distinct_clusters() == 16);
    CHECK(loaded.outlier_count() == 97);
    CHECK(loaded.size() == 268 + 97);

    // Tampered sidecar: one cluster size off.
    auto meta = nlohmann::json::parse(std::ifstream(sidecar_path(dir / "emulated.csv")));
    meta["params"]["cluster_sizes"][0] = meta["params"]["cluster_sizes"][0].get<int>() + 1;
    std::ofstream(sidecar_path(dir / "emulated.csv"), std::ios::trunc) << meta.dump();
    CHECK_THROWS_AS(load_labeled_csv(dir / "emulated.csv"), InvariantViolation);

    std::ofstream bad(dir / "bad.csv");
    bad << "id,label";
    for (int t = 0; t < 48; ++t) bad << ",v" << t;
    bad << "\n0,1";
    for (int t = 0; t < 48; ++t) bad << "," << (t % 2);
    bad << "\n1,0,0.5\n";
    bad.close();
    CHECK_THROWS_WITH(load_labeled_csv(dir / "bad.csv"), Catch::Matchers::ContainsSubstring("row 3"));
}

TEST_CASE("real data without a min-max state is normalised on load", "[real_data]") {
    const auto dir = temp_dir("raw");
    std::ofstream out(dir / "raw.csv");
    out << "id,label";
    for (int t = 0; t < 48; ++t) out << ",v" << t;
    out << "\n0,0";
    for (int t = 0; t < 48; ++t) out << "," << 2.0 + t;
    out << "\n";
    out.close();
    const auto data = load_labeled_csv(dir / "raw.csv");
    CHECK(data.series[0][0] == 0.0);
    CHECK(data.series[0][47] == 1.0);
}

TEST_CASE("report: single method gives a 1x1 table", "[report]") {
    const std::vector<ResultRecord> records = {{"s", 0, "ed+hac(ward)", "", "ARI", 0.5}};
    const auto s = summarize(records, "ARI");
    REQUIRE(s.scores.size() == 1);
    REQUIRE(s.scores[0].size() == 1);
    CHECK(s.mean_ranks == std::vector<double>{1.0});
    CHECK_FALSE(s.friedman.has_value());
    const auto tables = summary_tables(s, "one");
    CHECK(tables[0].rows.size() == 1);
    CHECK(tables[0].rows[0][0] == "ed");
    CHECK(tables[0].rows[0][1] == "hac(ward)");
}

TEST_CASE("report: rank sums match the method count and gaps are listed", "[report]") {
    std::vector<ResultRecord> records;
    Rng rng(SeedSpec{1, "report", 0, 0});
    const std::vector<std::string> methods = {"a", "b", "c", "d", "e"};
    for (std::size_t d = 0; d < 8; ++d) {
        for (const auto& m : methods) records.push_back({"s", d, m, "", "ARI", std::round(rng.uniform() * 4) / 4});
    }
    const auto s = summarize(records, "ARI", "s");
    const auto ranks = rank_table(s.scores);
    for (std::size_t d = 0; d < s.datasets.size(); ++d) {
        double sum = 0.0;
        for (const auto& row : ranks) sum += row[d];
        CHECK_THAT(sum, WithinAbs(15.0, 1e-12));
    }
    double total = 0.0;
    for (double r : s.mean_ranks) total += r;
    CHECK_THAT(total, WithinAbs(15.0, 1e-12));
    REQUIRE(s.friedman.has_value());
    CHECK(s.friedman->statistic == friedman(s.scores).statistic);

    records.pop_back();
    CHECK_THROWS_WITH(summarize(records, "ARI"), Catch::Matchers::ContainsSubstring("e @ s#7"));
    records.push_back(records.front());
    CHECK_THROWS_AS(summarize(records, "ARI"), InvariantViolation);
    CHECK_THROWS_AS(summarize(records, "PSI"), MissingCells);
}

TEST_CASE("report figures group by scenario and metric and skip per-cluster accuracies", "[report]") {
    const std::vector<ResultRecord> records = {
        {"a", 0, "ed", "", "acc_overall", 0.9}, {"a", 0, "ed", "", "acc_cluster_0", 1.0},
        {"b", 0, "ed", "", "ARI", 0.9},         {"b", 0, "ed", "", "PSI", 0.8},
    };
    const auto tables = report_figures(records);
    std::set<std::string> names;
    for (const auto& t : tables) names.insert(t.name);
    CHECK(names.contains("heatmap_a_acc_overall"));
    CHECK(names.contains("ranks_b_ARI"));
    CHECK(names.contains("tests_b_PSI"));
    CHECK(names.size() == 12);
    CHECK(table_stem("noise(sigma=0.05)") == "noise_sigma_0.05");
}

TEST_CASE("correlation tables delegate to correlation()", "[report]") {
    const std::vector<double> x = {0.1, 0.4, 0.35, 0.8, 0.9};
    const std::vector<double> y = {0.2, 0.3, 0.5, 0.7, 0.95};
    const auto tables = correlation_tables("t", {"a", "b", "c", "d", "e"}, x, y, "synthetic", "real");
    REQUIRE(tables.size() == 2);
    CHECK(tables[0].rows.size() == 5);
    CHECK(tables[1].rows[0][1] == format_number(correlation(x, y, CorrelationKind::Pearson).statistic));
    CHECK(tables[1].rows[1][1] == format_number(correlation(x, y, CorrelationKind::Spearman).statistic));
    CHECK(tables[1].rows[1][1] == "0.9");
}

TEST_CASE("outputs land in results.csv, figures_data and manifest.json", "[records]") {
    auto c = small_config();
    const auto dir = temp_dir("outputs");
    const auto run = run_stage1(c);
    write_outputs(dir, run, c, "stage1");
    CHECK(read_results(dir / "results.csv") == run.records);
    CHECK(std::filesystem::exists(dir / "figures_data" / "stage1_accuracy.csv"));
    const auto fig = read_figure(dir / "figures_data" / "stage1_summary.csv");
    CHECK(fig.header.front() == "family");
    const auto manifest = nlohmann::json::parse(std::ifstream(dir / "manifest.json"));
    CHECK(manifest["command"] == "stage1");
    CHECK(manifest["master_seed"] == 11);
    CHECK(manifest["datasets"].size() == 2);
    // Every record's (scenario, dataset_index) regenerates its dataset.
    const auto seed = manifest["datasets"][1].get<SeedSpec>();
    ScenarioSpec spec;
    spec.kind = ScenarioKind::Baseline;
    spec.n = 100;
    spec.equal_sizes = true;
    CHECK(seed == dataset_seed(spec, 11, 1));
    CHECK(manifest["versions"].contains("shape_catalogue"));
}
