#include "dlpbench/synthgen/catalogue.hpp"

#include <fstream>

#include "dlpbench/core/errors.hpp"
#include "embedded_catalogue.hpp"

namespace dlpbench {

namespace {

SeparationSpec parse_separation(const nlohmann::json& j, const std::vector<ShapeSpec>& shapes) {
    SeparationSpec s;
    if (j.contains("cluster")) {
        const auto id = j.at("cluster").get<std::size_t>();
        if (id >= shapes.size()) throw ParseError("separation base cluster " + std::to_string(id) + " unknown");
        s.shape = shapes[id];
    } else {
        s.shape = j.at("shape").get<ShapeSpec>();
        s.shape.validate();
    }
    s.component = j.value("component", std::size_t{0});
    if (s.component >= s.shape.components.size()) throw ParseError("separation component out of range");
    return s;
}

OutlierSpec parse_outliers(const nlohmann::json& j) {
    OutlierSpec o;
    const auto peaks = j.at("peaks").get<std::vector<int>>();
    if (peaks.size() != 2 || peaks[0] < 1 || peaks[0] > peaks[1]) throw ParseError("outlier peaks must be [lo, hi]");
    o.min_peaks = peaks[0];
    o.max_peaks = peaks[1];
    o.peak_loc = j.at("peak_loc").get<Range>();
    o.peak_scale = j.at("peak_scale").get<Range>();
    o.peak_magnitude = j.at("peak_magnitude").get<Range>();
    o.base = j.at("base").get<Range>();
    o.pv_probability = j.at("pv_probability").get<double>();
    const auto& pv = j.at("pv");
    o.pv = PvDip{pv.at("loc").get<Range>(), pv.at("width").get<Range>(), pv.at("depth").get<Range>()};
    o.step_probability = j.at("step_probability").get<double>();
    const auto& step = j.at("step");
    o.step_loc = step.at("loc").get<Range>();
    o.step_rate = step.at("rate").get<Range>();
    o.step_magnitude = step.at("magnitude").get<Range>();
    for (double p : {o.pv_probability, o.step_probability}) {
        if (!(p >= 0.0 && p <= 1.0)) throw ParseError("outlier feature probability outside [0, 1]");
    }
    return o;
}

}  // namespace

Catalogue parse_catalogue(const nlohmann::json& j) {
    try {
        Catalogue c;
        c.version = j.at("version").get<int>();
        c.shapes = j.at("shapes").get<std::vector<ShapeSpec>>();
        for (std::size_t i = 0; i < c.shapes.size(); ++i) {
            if (c.shapes[i].cluster_id != static_cast<int>(i)) {
                throw ParseError("shape ids must be 0..n-1 in order; entry " + std::to_string(i) + " has id " +
                                 std::to_string(c.shapes[i].cluster_id));
            }
            c.shapes[i].validate();
        }
        const auto& sep = j.at("separation");
        c.timing = parse_separation(sep.at("timing"), c.shapes);
        c.magnitude = parse_separation(sep.at("magnitude"), c.shapes);
        c.width = parse_separation(sep.at("width"), c.shapes);
        c.outliers = parse_outliers(j.at("outliers"));
        c.conflicts = parse_conflicts(j.at("conflicts"), c.shapes.size());
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("shape catalogue: ") + e.what());
    }
}

Catalogue load_catalogue(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open shape catalogue " + path.string());
    try {
        return parse_catalogue(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

nlohmann::json catalogue_json(const Catalogue& c) {
    nlohmann::json conflicts = nlohmann::json::array();
    for (std::size_t a = 0; a < c.conflicts.clusters(); ++a) {
        for (std::size_t b = a + 1; b < c.conflicts.clusters(); ++b) {
            const auto tags = c.conflicts.tags(static_cast<int>(a), static_cast<int>(b));
            if (tags.empty()) continue;
            nlohmann::json names = nlohmann::json::array();
            for (auto t : tags) names.push_back(tag_name(t));
            conflicts.push_back({{"pair", {a, b}}, {"tags", names}});
        }
    }
    const auto& o = c.outliers;
    auto sep = [](const SeparationSpec& s) { return nlohmann::json{{"shape", s.shape}, {"component", s.component}}; };
    return {{"version", c.version},
            {"shapes", c.shapes},
            {"separation", {{"timing", sep(c.timing)}, {"magnitude", sep(c.magnitude)}, {"width", sep(c.width)}}},
            {"outliers",
             {{"peaks", {o.min_peaks, o.max_peaks}},
              {"peak_loc", o.peak_loc},
              {"peak_scale", o.peak_scale},
              {"peak_magnitude", o.peak_magnitude},
              {"base", o.base},
              {"pv_probability", o.pv_probability},
              {"pv", {{"loc", o.pv.loc}, {"width", o.pv.width}, {"depth", o.pv.depth}}},
              {"step_probability", o.step_probability},
              {"step", {{"loc", o.step_loc}, {"rate", o.step_rate}, {"magnitude", o.step_magnitude}}}}},
            {"conflicts", conflicts}};
}

const Catalogue& default_catalogue() {
    static const Catalogue catalogue = [] {
        try {
            return parse_catalogue(nlohmann::json::parse(detail::kEmbeddedCatalogue));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("embedded shape catalogue: ") + e.what());
        }
    }();
    return catalogue;
}

}  // namespace dlpbench
