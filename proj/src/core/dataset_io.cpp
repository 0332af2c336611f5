#include "dlpbench/core/dataset_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/normalize.hpp"

namespace dlpbench {

namespace {

constexpr std::array<char, 8> kMatrixMagic{'D', 'L', 'P', 'B', 'D', 'M', '0', '1'};

static_assert(std::endian::native == std::endian::little, "matrix files assume a little-endian host");

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void parse_fail(std::size_t row, std::size_t col, const std::string& msg) {
    throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(col) + ": " + msg);
}

template <typename T>
T parse_field(std::string_view text, std::size_t row, std::size_t col) {
    text = trim(text);
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        parse_fail(row, col, "cannot parse '" + std::string(text) + "'");
    }
    return value;
}

bool is_normalized(std::span<const double> v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *lo == 0.0 && *hi == 1.0;
}

}  // namespace

std::string format_number(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc()) throw InvariantViolation("cannot format number");
    return std::string(buf.data(), ptr);
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv) {
    auto out = csv;
    out.replace_extension(".json");
    return out;
}

void write_dataset(const std::filesystem::path& csv, const LabeledDataset& data) {
    data.validate();
    if (csv.has_parent_path()) std::filesystem::create_directories(csv.parent_path());
    std::ofstream out(csv, std::ios::binary);
    if (!out) throw ParseError("cannot open " + csv.string() + " for writing");
    const std::size_t n = data.series.empty() ? kDlpLength : data.series.front().size();
    out << "id,label";
    for (std::size_t t = 0; t < n; ++t) out << ",v" << t;
    out << '\n';
    for (std::size_t i = 0; i < data.size(); ++i) {
        out << i << ',' << data.labels[i];
        for (double v : data.series[i].values()) out << ',' << format_number(v);
        out << '\n';
    }
    std::ofstream meta(sidecar_path(csv), std::ios::binary);
    meta << nlohmann::json(data.meta).dump(2) << '\n';
}

LabeledDataset read_dataset(const std::filesystem::path& csv, const ReadOptions& options) {
    std::ifstream in(csv, std::ios::binary);
    if (!in) throw ParseError("cannot open " + csv.string());
    std::string line;
    if (!std::getline(in, line)) throw ParseError("row 1: missing header");
    const auto header = split_fields(line);
    if (header.size() < 4 || trim(header[0]) != "id" || trim(header[1]) != "label") {
        throw ParseError("row 1: header must start with id,label,v0");
    }
    const std::size_t length = header.size() - 2;
    for (std::size_t c = 2; c < header.size(); ++c) {
        if (trim(header[c]) != "v" + std::to_string(c - 2)) {
            parse_fail(1, c + 1, "expected header v" + std::to_string(c - 2));
        }
    }
    if (options.length != 0 && length != options.length) {
        throw ParseError("row 1: expected " + std::to_string(options.length) + " value columns, found " +
                         std::to_string(length));
    }

    LabeledDataset data;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != header.size()) {
            throw ParseError("row " + std::to_string(row) + ": expected " + std::to_string(header.size()) +
                             " fields, found " + std::to_string(fields.size()));
        }
        const int label = parse_field<int>(fields[1], row, 2);
        if (label < kOutlierLabel) parse_fail(row, 2, "label must be -1 or non-negative");
        std::vector<double> values(length);
        for (std::size_t t = 0; t < length; ++t) {
            values[t] = parse_field<double>(fields[t + 2], row, t + 3);
            if (!std::isfinite(values[t])) parse_fail(row, t + 3, "non-finite value");
        }
        try {
            if (is_normalized(values)) {
                data.series.emplace_back(std::move(values));
            } else if (options.normalize) {
                data.series.push_back(minmax_normalize(values));
            } else {
                throw InvariantViolation("series is not min-max normalised");
            }
        } catch (const Error& e) {
            throw ParseError("row " + std::to_string(row) + ": " + e.what());
        }
        data.labels.push_back(label);
    }

    int max_label = -1;
    for (int l : data.labels) max_label = std::max(max_label, l);
    const auto meta_path = sidecar_path(csv);
    if (std::filesystem::exists(meta_path)) {
        std::ifstream meta(meta_path, std::ios::binary);
        try {
            data.meta = nlohmann::json::parse(meta).get<DatasetMeta>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(meta_path.string() + ": " + e.what());
        }
        if (data.meta.num_clusters == 0) data.meta.num_clusters = max_label + 1;
    } else {
        data.meta.scenario = "external";
        data.meta.num_clusters = max_label + 1;
    }
    data.validate();
    return data;
}

void write_matrix(const std::filesystem::path& path, const DissimilarityMatrix& d) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path.string() + " for writing");
    out.write(kMatrixMagic.data(), kMatrixMagic.size());
    const std::uint64_t n = d.size();
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    const auto full = d.to_full();
    out.write(reinterpret_cast<const char*>(full.data()), static_cast<std::streamsize>(full.size() * sizeof(double)));
}

DissimilarityMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::array<char, 8> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMatrixMagic) throw ParseError(path.string() + ": bad magic header");
    std::uint64_t n = 0;
    in.read(reinterpret_cast<char*>(&n), sizeof n);
    if (!in) throw ParseError(path.string() + ": truncated header");
    std::vector<double> full(n * n);
    in.read(reinterpret_cast<char*>(full.data()), static_cast<std::streamsize>(full.size() * sizeof(double)));
    if (!in) throw ParseError(path.string() + ": truncated matrix body");
    return DissimilarityMatrix::from_full(full, n);
}

}  // namespace dlpbench
