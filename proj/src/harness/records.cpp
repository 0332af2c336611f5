#include "dlpbench/harness/records.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <toml.hpp>

#include "dlpbench/core/dataset_io.hpp"
#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/types.hpp"
#include "dlpbench/harness/config.hpp"
#include "dlpbench/synthgen/catalogue.hpp"

#ifndef DLPBENCH_VERSION
#define DLPBENCH_VERSION "0.0.0"
#endif

namespace dlpbench {

namespace {

const char* kResultsHeader = "scenario,dataset_index,method_id,params,metric,value";

bool known_metric(std::string_view m) {
    if (m == "acc_overall" || m == "ARI" || m == "AMI" || m == "NVD1m" || m == "PSI") return true;
    constexpr std::string_view prefix = "acc_cluster_";
    if (!m.starts_with(prefix) || m.size() == prefix.size()) return false;
    for (char c : m.substr(prefix.size())) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

std::string join_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    return line;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

std::string hex64(std::uint64_t v) {
    std::ostringstream s;
    s << std::hex;
    s.width(16);
    s.fill('0');
    s << v;
    return s.str();
}

}  // namespace

void validate_record(const ResultRecord& r) {
    if (!std::isfinite(r.value)) {
        throw InvariantViolation("non-finite value for " + r.method_id + " / " + r.metric + " on " + r.scenario);
    }
    if (!known_metric(r.metric)) throw InvariantViolation("unknown metric '" + r.metric + "'");
}

void RunOutput::append(RunOutput&& other) {
    records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                   std::make_move_iterator(other.records.end()));
    figures.insert(figures.end(), std::make_move_iterator(other.figures.begin()),
                   std::make_move_iterator(other.figures.end()));
    seeds.insert(seeds.end(), other.seeds.begin(), other.seeds.end());
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (quoted) throw ParseError("unterminated quote");
    fields.push_back(std::move(current));
    return fields;
}

std::string results_csv(const std::vector<ResultRecord>& records) {
    std::string text = kResultsHeader;
    text += '\n';
    for (const auto& r : records) {
        validate_record(r);
        text += join_row({r.scenario, std::to_string(r.dataset_index), r.method_id, r.params, r.metric,
                          format_number(r.value)});
        text += '\n';
    }
    return text;
}

void write_results(const std::filesystem::path& path, const std::vector<ResultRecord>& records) {
    write_text(path, results_csv(records));
}

std::vector<ResultRecord> read_results(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::string line;
    if (!std::getline(in, line) || line != kResultsHeader) {
        throw ParseError(path.string() + " line 1: expected header '" + kResultsHeader + "'");
    }
    std::vector<ResultRecord> out;
    std::size_t number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        const auto where = path.string() + " line " + std::to_string(number);
        std::vector<std::string> f;
        try {
            f = split_csv_line(line);
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
        if (f.size() != 6) throw ParseError(where + ": expected 6 fields, found " + std::to_string(f.size()));
        ResultRecord r;
        r.scenario = f[0];
        r.method_id = f[2];
        r.params = f[3];
        r.metric = f[4];
        try {
            std::size_t used = 0;
            r.dataset_index = std::stoull(f[1], &used);
            if (used != f[1].size()) throw std::invalid_argument("trailing");
            r.value = std::stod(f[5], &used);
            if (used != f[5].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError(where + ": bad number");
        }
        try {
            validate_record(r);
        } catch (const InvariantViolation& e) {
            throw ParseError(where + ": " + e.what());
        }
        out.push_back(std::move(r));
    }
    return out;
}

void write_figure(const std::filesystem::path& dir, const FigureTable& table) {
    std::string text = join_row(table.header) + "\n";
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size()) {
            throw InvariantViolation("figure table '" + table.name + "' has a ragged row");
        }
        text += join_row(row) + "\n";
    }
    write_text(dir / (table.name + ".csv"), text);
}

FigureTable read_figure(const std::filesystem::path& csv) {
    std::ifstream in(csv);
    if (!in) throw ParseError("cannot open '" + csv.string() + "'");
    FigureTable t;
    t.name = csv.stem().string();
    std::string line;
    if (std::getline(in, line)) t.header = split_csv_line(line);
    while (std::getline(in, line)) {
        if (!line.empty()) t.rows.push_back(split_csv_line(line));
    }
    return t;
}

nlohmann::json make_manifest(const RunOutput& run, const ExperimentConfig& config, const std::string& command) {
    nlohmann::json m;
    m["command"] = command;
    m["config"] = config.to_json();
    m["config_hash"] = hex64(config.hash());
    m["master_seed"] = config.seed;
    m["replicates"] = config.replicates;
    m["threads"] = config.threads;
    m["record_count"] = run.records.size();
    nlohmann::json seeds = nlohmann::json::array();
    for (const auto& s : run.seeds) seeds.push_back(s);
    m["datasets"] = seeds;
    nlohmann::json figures = nlohmann::json::array();
    for (const auto& f : run.figures) figures.push_back("figures_data/" + f.name + ".csv");
    m["figures"] = figures;
    m["versions"] = {
        {"dlpbench", DLPBENCH_VERSION},
        {"shape_catalogue", default_catalogue().version},
        {"compiler", __VERSION__},
        {"cxx_standard", __cplusplus},
        {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                              std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                              std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
        {"tomlplusplus", std::to_string(TOML_LIB_MAJOR) + "." + std::to_string(TOML_LIB_MINOR) + "." +
                             std::to_string(TOML_LIB_PATCH)},
    };
    return m;
}

void write_outputs(const std::filesystem::path& out, const RunOutput& run, const ExperimentConfig& config,
                   const std::string& command) {
    std::filesystem::create_directories(out);
    write_results(out / "results.csv", run.records);
    for (const auto& f : run.figures) write_figure(out / "figures_data", f);
    write_text(out / "manifest.json", make_manifest(run, config, command).dump(2) + "\n");
}

}  // namespace dlpbench
