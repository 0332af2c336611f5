#include "dlpbench/harness/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/rng.hpp"

namespace dlpbench {

namespace {

// Typed access to one TOML table that rejects unknown keys.
class Section {
public:
    Section(const toml::table* table, std::string name) : table_(table), name_(std::move(name)) {}

    void expect_keys(std::initializer_list<std::string_view> allowed) const {
        if (!table_) return;
        const std::set<std::string_view> ok(allowed);
        for (const auto& [key, node] : *table_) {
            if (!ok.contains(key.str())) throw ConfigError(where(key.str()) + ": unknown key");
        }
    }

    template <typename T>
    void read(std::string_view key, T& target) const {
        const toml::node* node = find(key);
        if (!node) return;
        if constexpr (std::is_same_v<T, bool>) {
            auto v = node->value<bool>();
            if (!v) throw ConfigError(where(key) + ": expected a boolean");
            target = *v;
        } else if constexpr (std::is_same_v<T, std::string>) {
            auto v = node->value<std::string>();
            if (!v) throw ConfigError(where(key) + ": expected a string");
            target = *v;
        } else if constexpr (std::is_floating_point_v<T>) {
            auto v = node->value<double>();
            if (!v) throw ConfigError(where(key) + ": expected a number");
            target = *v;
        } else {
            auto v = node->value<std::int64_t>();
            if (!v || *v < 0) throw ConfigError(where(key) + ": expected a non-negative integer");
            target = static_cast<T>(*v);
        }
    }

    template <typename T>
    void read_list(std::string_view key, std::vector<T>& target) const {
        const toml::node* node = find(key);
        if (!node) return;
        const auto* array = node->as_array();
        if (!array) throw ConfigError(where(key) + ": expected an array");
        std::vector<T> out;
        for (const auto& item : *array) {
            std::optional<T> v = item.value<T>();
            if (!v) throw ConfigError(where(key) + ": unexpected element type");
            out.push_back(*v);
        }
        target = std::move(out);
    }

    Section sub(std::string_view key) const {
        const toml::node* node = find(key);
        if (node && !node->is_table()) throw ConfigError(where(key) + ": expected a table");
        return Section(node ? node->as_table() : nullptr, std::string(key));
    }

private:
    const toml::node* find(std::string_view key) const { return table_ ? table_->get(key) : nullptr; }
    std::string where(std::string_view key) const {
        return name_.empty() ? std::string(key) : name_ + "." + std::string(key);
    }

    const toml::table* table_;
    std::string name_;
};

void read_scenario(const Section& s, ScenarioSpec& spec) {
    s.expect_keys({"scenario", "n", "equal_sizes", "sigma", "k_star", "balance", "n_outliers", "axis", "level"});
    std::string text = scenario_kind_name(spec.kind);
    s.read("scenario", text);
    spec.kind = parse_scenario_kind(text);
    s.read("n", spec.n);
    s.read("equal_sizes", spec.equal_sizes);
    s.read("sigma", spec.sigma);
    s.read("k_star", spec.k_star);
    text = balance_name(spec.balance);
    s.read("balance", text);
    spec.balance = parse_balance(text);
    s.read("n_outliers", spec.n_outliers);
    text = axis_name(spec.axis);
    s.read("axis", text);
    spec.axis = parse_axis(text);
    s.read("level", spec.level);
}

nlohmann::json scenario_json(const ScenarioSpec& s) {
    return {{"scenario", scenario_kind_name(s.kind)}, {"n", s.n},        {"equal_sizes", s.equal_sizes},
            {"sigma", s.sigma},                     {"k_star", s.k_star}, {"balance", balance_name(s.balance)},
            {"n_outliers", s.n_outliers},           {"axis", axis_name(s.axis)}, {"level", s.level}};
}

}  // namespace

Stage2Config::Stage2Config() {
    for (const auto& a : paradigm_algorithms()) algorithms.push_back(a.id());
}

ScenarioKind parse_scenario_kind(std::string_view name) {
    for (auto k : {ScenarioKind::Baseline, ScenarioKind::NoiseSweep, ScenarioKind::SizeSweep,
                   ScenarioKind::ClusterCountSweep, ScenarioKind::Balance, ScenarioKind::Outliers,
                   ScenarioKind::Separation, ScenarioKind::EmulateReal}) {
        if (scenario_kind_name(k) == name) return k;
    }
    throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
    if (replicates < 1) throw ConfigError("replicates must be at least 1");
    auto check = [](const std::string& what, auto&& fn) {
        try {
            fn();
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& e) {
            throw ConfigError(what + ": " + e.what());
        }
    };
    check("generate", [&] { generate.validate(); });
    for (const auto& m : stage1.methods) check("stage1 method '" + m + "'", [&] { method_family(m, stage1.mode); });
    for (const auto& p : stage2.paradigms) {
        check("stage2 paradigm '" + p + "'", [&] { method_family(p, stage2.mode); });
    }
    for (const auto& a : stage2.algorithms) {
        check("stage2 algorithm '" + a + "'", [&] {
            const auto spec = AlgoSpec::parse(a);
            spec.validate();
            if (spec.indivisible()) throw ConfigError("use stage2.kmeans / stage2.kshape for '" + a + "'");
        });
    }
    if (stage1.methods.empty()) throw ConfigError("stage1.methods is empty");
    if (stage2.metrics.empty()) throw ConfigError("stage2.metrics is empty");
    if ((stage2.paradigms.empty() || stage2.algorithms.empty()) && !stage2.kmeans && !stage2.kshape) {
        throw ConfigError("stage2 has no approaches to run");
    }
    if (sweep.separation_methods.empty()) throw ConfigError("sweep.separation_methods is empty");
    static const std::set<std::string> metrics = {"ARI", "AMI", "NVD1m", "PSI"};
    for (const auto& m : stage2.metrics) {
        if (!metrics.contains(m)) throw ConfigError("unknown stage2 metric '" + m + "'");
    }
    if (stage1.n == 0 || stage1.n % 20 != 0) throw ConfigError("stage1.n must be a positive multiple of 20");
    if (stage2.n == 0 || sweep.n == 0) throw ConfigError("series counts must be positive");
    for (const auto& m : sweep.separation_methods) {
        check("separation method '" + m + "'", [&] { Paradigm::parse(m); });
    }
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["seed"] = seed;
    j["replicates"] = replicates;
    j["generate"] = scenario_json(generate);
    j["stage1"] = {{"mode", grid_mode_name(stage1.mode)}, {"methods", stage1.methods}, {"n", stage1.n}};
    j["stage2"] = {{"mode", grid_mode_name(stage2.mode)}, {"paradigms", stage2.paradigms},
                   {"algorithms", stage2.algorithms},     {"kmeans", stage2.kmeans},
                   {"kshape", stage2.kshape},             {"members", stage2.members},
                   {"metrics", stage2.metrics},           {"n", stage2.n}};
    j["sweep"] = {{"n", sweep.n},
                  {"levels", sweep.levels},
                  {"axis", axis_name(sweep.axis)},
                  {"separation_methods", sweep.separation_methods},
                  {"separation_replicates", sweep.separation_replicates}};
    return j;
}

std::uint64_t ExperimentConfig::hash() const { return fnv1a64(to_json().dump()); }

ExperimentConfig parse_config(std::string_view toml_text) {
    toml::table root;
    try {
        root = toml::parse(toml_text);
    } catch (const toml::parse_error& e) {
        std::ostringstream msg;
        msg << e.description() << " at line " << e.source().begin.line;
        throw ConfigError(msg.str());
    }
    ExperimentConfig c;
    const Section top(&root, "");
    top.expect_keys({"seed", "replicates", "threads", "out", "generate", "stage1", "stage2", "sweep"});
    top.read("seed", c.seed);
    top.read("replicates", c.replicates);
    top.read("threads", c.threads);
    std::string out = c.out.string();
    top.read("out", out);
    c.out = out;

    read_scenario(top.sub("generate"), c.generate);

    const auto s1 = top.sub("stage1");
    s1.expect_keys({"mode", "methods", "n"});
    std::string mode = grid_mode_name(c.stage1.mode);
    s1.read("mode", mode);
    c.stage1.mode = parse_grid_mode(mode);
    s1.read_list("methods", c.stage1.methods);
    s1.read("n", c.stage1.n);

    const auto s2 = top.sub("stage2");
    s2.expect_keys({"mode", "paradigms", "algorithms", "kmeans", "kshape", "members", "metrics", "n"});
    mode = grid_mode_name(c.stage2.mode);
    s2.read("mode", mode);
    c.stage2.mode = parse_grid_mode(mode);
    s2.read_list("paradigms", c.stage2.paradigms);
    s2.read_list("algorithms", c.stage2.algorithms);
    s2.read("kmeans", c.stage2.kmeans);
    s2.read("kshape", c.stage2.kshape);
    s2.read("members", c.stage2.members);
    s2.read_list("metrics", c.stage2.metrics);
    s2.read("n", c.stage2.n);

    const auto sw = top.sub("sweep");
    sw.expect_keys({"n", "levels", "axis", "separation_methods", "separation_replicates"});
    sw.read("n", c.sweep.n);
    sw.read_list("levels", c.sweep.levels);
    std::string axis = axis_name(c.sweep.axis);
    sw.read("axis", axis);
    c.sweep.axis = parse_axis(axis);
    sw.read_list("separation_methods", c.sweep.separation_methods);
    sw.read("separation_replicates", c.sweep.separation_replicates);

    c.validate();
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    std::stringstream text;
    text << in.rdbuf();
    try {
        return parse_config(text.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

}  // namespace dlpbench
