#include "dlpbench/harness/method_id.hpp"

#include <functional>

#include "dlpbench/core/call_syntax.hpp"
#include "dlpbench/core/errors.hpp"
#include "dlpbench/representation/bof.hpp"
#include "dlpbench/representation/dwt.hpp"
#include "dlpbench/representation/features.hpp"

namespace dlpbench {

namespace {

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

// Windowed measure family: one member per w, each copied from `base`.
std::vector<Paradigm> over_windows(MeasureSpec base, const std::vector<int>& windows,
                                   const std::function<void(std::vector<Paradigm>&, MeasureSpec)>& inner = {}) {
    std::vector<Paradigm> out;
    for (int w : windows) {
        base.w = w;
        if (inner) {
            inner(out, base);
        } else {
            out.push_back(Paradigm::of(base));
        }
    }
    return out;
}

std::vector<double> tenths() {
    std::vector<double> v;
    for (int i = 0; i <= 10; ++i) v.push_back(i / 10.0);
    return v;
}

const std::vector<std::string> kSaxNames = {"sax_mindist", "sax_lcss", "sax_lev", "sax_vlev"};

std::vector<Paradigm> measure_grid(Measure kind, GridMode mode) {
    const auto base = MeasureSpec::defaults(kind);
    if (mode == GridMode::Default) return {Paradigm::of(base)};
    const bool full = mode == GridMode::Full;
    switch (kind) {
        case Measure::DTW: return over_windows(base, full ? range(1, 48) : range(1, 6));
        case Measure::KSD: return over_windows(base, full ? range(1, 48) : range(1, 3));
        case Measure::MPD: return over_windows(base, full ? range(3, 48) : range(41, 47));
        case Measure::ERP: {
            const std::vector<double> gaps = full ? tenths() : std::vector<double>{0.0, 0.1, 0.2, 0.3};
            return over_windows(base, full ? range(1, 48) : range(1, 5), [&](auto& out, MeasureSpec s) {
                for (double g : gaps) {
                    s.g = g;
                    out.push_back(Paradigm::of(s));
                }
            });
        }
        case Measure::MSM: {
            const std::vector<double> costs = full ? std::vector<double>{0.01, 0.1, 1.0, 10.0, 100.0}
                                                   : std::vector<double>{0.1};
            return over_windows(base, full ? range(1, 48) : range(1, 6), [&](auto& out, MeasureSpec s) {
                for (double c : costs) {
                    s.c = c;
                    out.push_back(Paradigm::of(s));
                }
            });
        }
        case Measure::TWED: {
            const std::vector<double> nus = full ? std::vector<double>{1.0, 0.1, 0.01, 0.001, 1e-4, 1e-5}
                                                 : std::vector<double>{1e-4, 1e-3, 1e-2};
            const std::vector<double> lambdas = full ? std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}
                                                     : std::vector<double>{0.25, 0.5, 0.75};
            std::vector<Paradigm> out;
            for (double nu : nus) {
                for (double lambda : lambdas) {
                    auto s = base;
                    s.nu = nu;
                    s.lambda = lambda;
                    out.push_back(Paradigm::of(s));
                }
            }
            return out;
        }
        case Measure::ERS:
        case Measure::LCSS:
            if (!full) break;
            return over_windows(base, range(1, 48), [&](auto& out, MeasureSpec s) {
                for (double e : tenths()) {
                    s.epsilon = e;
                    out.push_back(Paradigm::of(s));
                }
            });
        default: break;
    }
    return {Paradigm::of(base)};
}

std::vector<Paradigm> rep_grid(RepKind kind, GridMode mode, SaxDistance sax_distance = SaxDistance::Mindist) {
    auto base = RepSpec::defaults(kind);
    if (kind == RepKind::SAX) base.distance = sax_distance;
    if (kind == RepKind::PCA && mode == GridMode::Retained) {
        std::vector<Paradigm> out;
        for (int nc : range(5, 14)) {
            base.n_c = nc;
            out.push_back(Paradigm::of(base));
        }
        return out;
    }
    if (mode != GridMode::Full) return {Paradigm::of(base)};

    std::vector<Paradigm> out;
    auto push = [&](const RepSpec& s) { out.push_back(Paradigm::of(s)); };
    const std::vector<BinStrategy> strategies = {BinStrategy::Quantile, BinStrategy::Uniform, BinStrategy::Normal};
    switch (kind) {
        case RepKind::PAA:
            for (int w : range(1, 24)) { base.w = w; push(base); }
            break;
        case RepKind::PCA:
            for (int nc : range(1, 48)) { base.n_c = nc; push(base); }
            break;
        case RepKind::DWT:
            for (int order : range(1, 5)) {
                for (int level : range(1, max_dwt_level(order))) {
                    for (auto mode_c : {DwtMode::All, DwtMode::Approximation, DwtMode::LatestPair}) {
                        base.wavelet = order;
                        base.level = level;
                        base.coeffs = mode_c;
                        push(base);
                    }
                }
            }
            break;
        case RepKind::SAX:
            for (int nb : range(2, 26)) {
                for (auto b : strategies) { base.n_b = nb; base.bins = b; push(base); }
            }
            break;
        case RepKind::GAF:
            for (int ni : range(2, 48)) {
                for (auto t : {GafType::Summation, GafType::Difference}) { base.n_i = ni; base.gaf = t; push(base); }
            }
            break;
        case RepKind::MTF:
            for (int ni : range(2, 48)) {
                for (int nb : range(2, 26)) {
                    for (auto b : strategies) { base.n_i = ni; base.n_b = nb; base.bins = b; push(base); }
                }
            }
            break;
        case RepKind::BOF: {
            const int cap = static_cast<int>(feature_names().size());
            for (auto norm : {FeatureNormalization::None, FeatureNormalization::MinMax}) {
                base.norm = norm;
                for (int nc = 5; nc <= 75 && nc <= cap; nc += 5) { base.n_c = nc; push(base); }
                base.n_c = 0;
                push(base);
            }
            break;
        }
    }
    return out;
}

}  // namespace

Paradigm Paradigm::parse(std::string_view text) {
    if (RepSpec::is_representation(text)) return of(RepSpec::parse(text));
    return of(MeasureSpec::parse(text));
}

Paradigm Paradigm::of(const MeasureSpec& m) {
    m.validate();
    Paradigm p;
    p.measure = m;
    return p;
}

Paradigm Paradigm::of(const RepSpec& r) {
    r.validate();
    Paradigm p;
    p.is_representation = true;
    p.rep = r;
    return p;
}

std::string Paradigm::id() const { return is_representation ? rep.id() : measure.id(); }

std::string Paradigm::family() const {
    return std::string(is_representation ? rep_name(rep.kind) : measure_name(measure.kind));
}

std::string Paradigm::params() const {
    const auto text = id();
    const auto open = text.find('(');
    if (open == std::string::npos) return "";
    return text.substr(open + 1, text.size() - open - 2);
}

std::string ParadigmFamily::report_id() const {
    if (members.size() == 1) return members.front().id();
    return name + "_exp";
}

GridMode parse_grid_mode(std::string_view text) {
    if (text == "default") return GridMode::Default;
    if (text == "retained") return GridMode::Retained;
    if (text == "full") return GridMode::Full;
    throw ConfigError("unknown grid mode '" + std::string(text) + "' (default, retained or full)");
}

std::string grid_mode_name(GridMode mode) {
    switch (mode) {
        case GridMode::Default: return "default";
        case GridMode::Retained: return "retained";
        case GridMode::Full: return "full";
    }
    return "?";
}

const std::vector<std::string>& stage1_method_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (auto m : all_measures()) {
            if (m == Measure::MM) {
                for (const char* p : {"mm_0.5", "mm_3", "mm_4", "mm_5"}) v.emplace_back(p);
            } else {
                v.emplace_back(measure_name(m));
            }
        }
        for (auto r : {RepKind::PAA, RepKind::PCA, RepKind::DWT, RepKind::GAF, RepKind::MTF, RepKind::BOF}) {
            v.emplace_back(rep_name(r));
        }
        v.insert(v.end(), kSaxNames.begin(), kSaxNames.end());
        return v;
    }();
    return names;
}

const std::vector<std::string>& retained_method_names() {
    static const std::vector<std::string> names = {"cid", "dtw", "erp", "ed",  "fd",  "ksd",
                                                   "mpd", "mm_3", "msm", "pca", "sbd", "twed"};
    return names;
}

ParadigmFamily method_family(std::string_view name, GridMode mode) {
    ParadigmFamily family{std::string(name), {}};
    if (name.find('(') != std::string_view::npos) {
        family.members.push_back(Paradigm::parse(name));
        family.name = family.members.front().id();
        return family;
    }
    if (name.starts_with("mm_")) {
        auto spec = MeasureSpec::defaults(Measure::MM);
        try {
            spec.p = std::stod(std::string(name.substr(3)));
        } catch (const std::exception&) {
            throw ConfigError("bad Minkowski order in '" + std::string(name) + "'");
        }
        family.members.push_back(Paradigm::of(spec));
        return family;
    }
    if (name.starts_with("sax_")) {
        family.members = rep_grid(RepKind::SAX, mode, parse_sax_distance(std::string(name.substr(4))));
        return family;
    }
    const auto call = parse_call(name);
    if (RepSpec::is_representation(call.name)) {
        family.members = rep_grid(RepSpec::parse(call.name).kind, mode);
    } else {
        family.members = measure_grid(MeasureSpec::parse(call.name).kind, mode);
    }
    return family;
}

std::string approach_id(std::string_view paradigm_id, const AlgoSpec& algo) {
    if (algo.indivisible()) return algo.id();
    return std::string(paradigm_id) + "+" + algo.id();
}

std::pair<std::string, std::string> split_approach_id(std::string_view id) {
    const auto plus = id.find('+');
    if (plus == std::string_view::npos) return {"raw", std::string(id)};
    return {std::string(id.substr(0, plus)), std::string(id.substr(plus + 1))};
}

}  // namespace dlpbench
