#include "dlpbench/representation/rep_spec.hpp"

#include <array>

#include "dlpbench/core/call_syntax.hpp"
#include "dlpbench/core/dataset_io.hpp"
#include "dlpbench/core/errors.hpp"
#include "dlpbench/representation/features.hpp"

namespace dlpbench {

namespace {

constexpr std::array<std::pair<RepKind, std::string_view>, 7> kNames{{
    {RepKind::PAA, "paa"}, {RepKind::PCA, "pca"}, {RepKind::DWT, "dwt"}, {RepKind::SAX, "sax"},
    {RepKind::GAF, "gaf"}, {RepKind::MTF, "mtf"}, {RepKind::BOF, "bof"},
}};

void check(bool ok, const std::string& message) {
    if (!ok) throw InvalidParameter(message);
}

}  // namespace

std::string_view rep_name(RepKind k) {
    for (const auto& [kind, name] : kNames) {
        if (kind == k) return name;
    }
    return "?";
}

RepSpec RepSpec::defaults(RepKind kind) {
    RepSpec s;
    s.kind = kind;
    if (kind == RepKind::BOF) s.n_c = 0;
    if (kind == RepKind::MTF) s.n_b = 5;
    return s;
}

bool RepSpec::is_representation(std::string_view text) {
    const auto name = parse_call(text).name;
    for (const auto& [kind, n] : kNames) {
        if (n == name) return true;
    }
    return false;
}

RepSpec RepSpec::parse(std::string_view text) {
    const Call call = parse_call(text);
    const RepKind* found = nullptr;
    for (const auto& entry : kNames) {
        if (entry.second == call.name) found = &entry.first;
    }
    if (!found) throw ParseError("unknown representation '" + call.name + "'");
    RepSpec s = defaults(*found);
    switch (s.kind) {
        case RepKind::PAA:
            call.expect_keys({"w"});
            s.w = call.integer("w", s.w);
            break;
        case RepKind::PCA:
            call.expect_keys({"nc"});
            s.n_c = call.integer("nc", s.n_c);
            break;
        case RepKind::DWT:
            call.expect_keys({"wavelet", "level", "coeffs"});
            s.wavelet = call.integer("wavelet", s.wavelet);
            check(s.wavelet >= 1 && s.wavelet <= 5, "dwt: wavelet order must lie in 1..5");
            s.level = call.integer("level", max_dwt_level(s.wavelet));
            if (auto c = call.get("coeffs")) s.coeffs = parse_dwt_mode(*c);
            break;
        case RepKind::SAX:
            call.expect_keys({"nb", "bins", "dist"});
            s.n_b = call.integer("nb", s.n_b);
            if (auto b = call.get("bins")) s.bins = parse_bin_strategy(*b);
            if (auto d = call.get("dist")) s.distance = parse_sax_distance(*d);
            break;
        case RepKind::GAF:
            call.expect_keys({"ni", "type"});
            s.n_i = call.integer("ni", s.n_i);
            if (auto t = call.get("type")) s.gaf = parse_gaf_type(*t);
            break;
        case RepKind::MTF:
            call.expect_keys({"ni", "nb", "bins"});
            s.n_i = call.integer("ni", s.n_i);
            s.n_b = call.integer("nb", s.n_b);
            if (auto b = call.get("bins")) s.bins = parse_bin_strategy(*b);
            break;
        case RepKind::BOF:
            call.expect_keys({"nc", "norm"});
            if (auto nc = call.get("nc"); nc && *nc != "all") s.n_c = call.integer("nc", 0);
            if (auto n = call.get("norm")) s.norm = parse_feature_normalization(*n);
            break;
    }
    s.validate();
    return s;
}

std::string RepSpec::id() const {
    Call call{std::string(rep_name(kind)), {}};
    auto add = [&](const char* key, std::string value) { call.args.emplace_back(key, std::move(value)); };
    switch (kind) {
        case RepKind::PAA: add("w", std::to_string(w)); break;
        case RepKind::PCA: add("nc", std::to_string(n_c)); break;
        case RepKind::DWT:
            add("wavelet", std::to_string(wavelet));
            add("level", std::to_string(level));
            add("coeffs", dwt_mode_name(coeffs));
            break;
        case RepKind::SAX:
            add("nb", std::to_string(n_b));
            add("bins", bin_strategy_name(bins));
            add("dist", sax_distance_name(distance));
            break;
        case RepKind::GAF:
            add("ni", std::to_string(n_i));
            add("type", gaf_type_name(gaf));
            break;
        case RepKind::MTF:
            add("ni", std::to_string(n_i));
            add("nb", std::to_string(n_b));
            add("bins", bin_strategy_name(bins));
            break;
        case RepKind::BOF:
            add("nc", n_c == 0 ? "all" : std::to_string(n_c));
            add("norm", feature_normalization_name(norm));
            break;
    }
    return call.str();
}

void RepSpec::validate() const {
    switch (kind) {
        case RepKind::PAA: check(w >= 1 && w <= 24, "paa: w must lie in 1..24"); break;
        case RepKind::PCA: check(n_c >= 1 && n_c <= 48, "pca: n_c must lie in 1..48"); break;
        case RepKind::DWT:
            check(wavelet >= 1 && wavelet <= 5, "dwt: wavelet order must lie in 1..5");
            if (level < 1 || level > max_dwt_level(wavelet)) {
                throw LevelTooDeep("dwt: level " + std::to_string(level) + " outside 1.." +
                                   std::to_string(max_dwt_level(wavelet)));
            }
            break;
        case RepKind::SAX: check(n_b >= 2 && n_b <= 26, "sax: n_b must lie in 2..26"); break;
        case RepKind::GAF: check(n_i >= 2 && n_i <= 48, "gaf: n_i must lie in 2..48"); break;
        case RepKind::MTF:
            check(n_i >= 2 && n_i <= 48, "mtf: n_i must lie in 2..48");
            check(n_b >= 2 && n_b <= 26, "mtf: n_b must lie in 2..26");
            break;
        case RepKind::BOF:
            check(n_c >= 0 && static_cast<std::size_t>(n_c) <= feature_names().size(),
                  "bof: n_c must lie in 1.." + std::to_string(feature_names().size()) + " or be 'all'");
            break;
    }
}

}  // namespace dlpbench
