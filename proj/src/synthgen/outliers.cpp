#include "dlpbench/synthgen/outliers.hpp"

#include <algorithm>
#include <cmath>

#include "dlpbench/synthgen/generator.hpp"

namespace dlpbench {

namespace {

Range fixed(double v) { return Range{v, v}; }

}  // namespace

ShapeSpec draw_outlier_shape(const OutlierSpec& spec, Rng& rng) {
    ShapeSpec shape;
    shape.cluster_id = kOutlierLabel;
    shape.name = "outlier";
    const auto peaks = rng.discrete_uniform(spec.min_peaks, spec.max_peaks);
    for (std::int64_t p = 0; p < peaks; ++p) {
        const double loc = spec.peak_loc.draw(rng);
        const double scale = spec.peak_scale.draw(rng);
        shape.components.emplace_back(GaussianPeak{fixed(loc), fixed(scale), fixed(spec.peak_magnitude.draw(rng))});
    }
    double base = spec.base.draw(rng);
    if (rng.bernoulli(spec.step_probability)) {
        const auto dir = rng.bernoulli(0.5) ? StepDirection::Up : StepDirection::Down;
        const double loc = spec.step_loc.draw(rng);
        const double rate = spec.step_rate.draw(rng);
        shape.components.emplace_back(LogisticStep{fixed(loc), fixed(rate), fixed(spec.step_magnitude.draw(rng)), dir});
    }
    double dip_depth = 0.0;
    if (rng.bernoulli(spec.pv_probability)) {
        const double loc = spec.pv.loc.draw(rng);
        const double width = spec.pv.width.draw(rng);
        dip_depth = spec.pv.depth.draw(rng);
        shape.components.emplace_back(PvDip{fixed(loc), fixed(width), fixed(dip_depth)});
    }

    // Rescale the positive components so base + peaks + step stays within 1.
    double peak_max = 0.0;
    for (std::size_t i = 0; i < kCurveLength; ++i) {
        const double t = static_cast<double>(i) * kCurveStepHours;
        double v = 0.0;
        for (const auto& c : shape.components) {
            if (const auto* g = std::get_if<GaussianPeak>(&c)) {
                v += g->magnitude.lo * std::exp(-(t - g->loc.lo) * (t - g->loc.lo) / (2.0 * g->scale.lo * g->scale.lo));
            } else if (const auto* s = std::get_if<LogisticStep>(&c)) {
                const double z = s->rate.lo * (t - s->loc.lo);
                v += s->magnitude.lo / (1.0 + std::exp(s->direction == StepDirection::Up ? -z : z));
            }
        }
        peak_max = std::max(peak_max, v);
    }
    base = std::max(base, dip_depth);
    const double room = 1.0 - base;
    if (peak_max > room && peak_max > 0.0) {
        const double factor = room / peak_max;
        for (auto& c : shape.components) {
            if (auto* g = std::get_if<GaussianPeak>(&c)) {
                g->magnitude = fixed(g->magnitude.lo * factor);
            } else if (auto* s = std::get_if<LogisticStep>(&c)) {
                s->magnitude = fixed(s->magnitude.lo * factor);
            }
        }
    }
    shape.base = fixed(base);
    return shape;
}

TimeSeries gen_outlier(const OutlierSpec& spec, const StarParams& params, Rng& rng) {
    ShapeSpec shape = draw_outlier_shape(spec, rng);
    Rng curve_rng = rng.split(0);
    auto curve = gen_characteristic_curve(shape, curve_rng);
    shape.y0_mode = curve.front() >= 0.5 ? Y0Mode::High : Y0Mode::Low;
    const auto y = simulate_star(curve, params, shape.y0_mode, rng);
    return downsample_and_normalize(y, rng);
}

TimeSeries gen_outlier(Rng& rng, double sigma_l, double sigma_h) {
    StarParams params;
    params.sigma_l = sigma_l;
    params.sigma_h = sigma_h;
    return gen_outlier(default_catalogue().outliers, params, rng);
}

}  // namespace dlpbench
