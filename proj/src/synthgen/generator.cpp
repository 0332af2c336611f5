#include "dlpbench/synthgen/generator.hpp"

#include <algorithm>
#include <cmath>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/normalize.hpp"
#include "dlpbench/synthgen/catalogue.hpp"

namespace dlpbench {

namespace {

struct DrawnComponent {
    enum Kind { Peak, Up, Down, Dip } kind;
    double loc, spread, magnitude;

    double at(double t) const {
        switch (kind) {
            case Peak: return magnitude * std::exp(-(t - loc) * (t - loc) / (2.0 * spread * spread));
            case Up: return magnitude / (1.0 + std::exp(-spread * (t - loc)));
            case Down: return magnitude / (1.0 + std::exp(spread * (t - loc)));
            case Dip: return -magnitude * std::exp(-(t - loc) * (t - loc) / (2.0 * spread * spread));
        }
        return 0.0;
    }
};

DrawnComponent draw(const Component& c, Rng& rng) {
    // Parameters are drawn in a fixed order: location, spread, magnitude.
    if (const auto* g = std::get_if<GaussianPeak>(&c)) {
        const double loc = g->loc.draw(rng);
        const double scale = g->scale.draw(rng);
        return {DrawnComponent::Peak, loc, scale, g->magnitude.draw(rng)};
    }
    if (const auto* s = std::get_if<LogisticStep>(&c)) {
        const double loc = s->loc.draw(rng);
        const double rate = s->rate.draw(rng);
        return {s->direction == StepDirection::Up ? DrawnComponent::Up : DrawnComponent::Down, loc, rate,
                s->magnitude.draw(rng)};
    }
    const auto& p = std::get<PvDip>(c);
    const double loc = p.loc.draw(rng);
    const double width = p.width.draw(rng);
    return {DrawnComponent::Dip, loc, width, p.depth.draw(rng)};
}

}  // namespace

std::vector<double> gen_characteristic_curve(const ShapeSpec& spec, Rng& rng) {
    const double base = spec.base.draw(rng);
    std::vector<DrawnComponent> drawn;
    drawn.reserve(spec.components.size());
    for (const auto& c : spec.components) drawn.push_back(draw(c, rng));

    std::vector<double> curve(kCurveLength);
    double mass = 0.0;
    double clipped = 0.0;
    for (std::size_t i = 0; i < kCurveLength; ++i) {
        const double t = static_cast<double>(i) * kCurveStepHours;
        double v = base;
        for (const auto& d : drawn) v += d.at(t);
        const double c = std::clamp(v, 0.0, 1.0);
        mass += std::abs(v);
        clipped += std::abs(v - c);
        curve[i] = c;
    }
    if (mass > 0.0 && clipped > 0.05 * mass) {
        throw SpecOutOfBounds("shape " + std::to_string(spec.cluster_id) + " ('" + spec.name + "') clipped " +
                              std::to_string(100.0 * clipped / mass) + "% of its mass");
    }
    return curve;
}

std::vector<double> simulate_star(std::span<const double> curve, const StarParams& p, Y0Mode mode, Rng& rng) {
    if (curve.size() != kCurveLength) {
        throw LengthMismatch("characteristic curve has " + std::to_string(curve.size()) + " points, expected 480");
    }
    std::vector<double> y(curve.size());
    y[0] = mode == Y0Mode::High ? rng.normal(1.5, p.sigma_h) : rng.normal(0.0, p.sigma_l);
    for (std::size_t t = 1; t < curve.size(); ++t) {
        const double c = curve[t];
        const double noise = rng.normal(0.0, c < 0.5 ? p.sigma_l : p.sigma_h);
        y[t] = p.theta1 * y[t - 1] + (1.0 + p.theta2 * y[t - 1]) * c + noise;
    }
    return y;
}

TimeSeries downsample_and_normalize(std::span<const double> y, std::size_t offset) {
    if (y.size() != kCurveLength) {
        throw LengthMismatch("simulated series has " + std::to_string(y.size()) + " points, expected 480");
    }
    if (offset > 9) throw InvalidParameter("downsampling offset must be in 0..9");
    std::vector<double> picked(kDlpLength);
    for (std::size_t m = 0; m < kDlpLength; ++m) picked[m] = y[offset + 10 * m];
    return minmax_normalize(picked);
}

TimeSeries downsample_and_normalize(std::span<const double> y, Rng& rng) {
    return downsample_and_normalize(y, static_cast<std::size_t>(rng.discrete_uniform(0, 9)));
}

TimeSeries gen_dlp(const ShapeSpec& spec, const StarParams& params, Rng& rng) {
    const auto curve = gen_characteristic_curve(spec, rng);
    const auto y = simulate_star(curve, params, spec.y0_mode, rng);
    return downsample_and_normalize(y, rng);
}

TimeSeries gen_dlp(int cluster_id, double sigma_l, double sigma_h, Rng& rng) {
    const auto& shapes = default_catalogue().shapes;
    if (cluster_id < 0 || cluster_id >= static_cast<int>(shapes.size())) {
        throw InvalidScenarioParams("cluster id " + std::to_string(cluster_id) + " outside 0.." +
                                    std::to_string(shapes.size() - 1));
    }
    StarParams params;
    params.sigma_l = sigma_l;
    params.sigma_h = sigma_h;
    return gen_dlp(shapes[static_cast<std::size_t>(cluster_id)], params, rng);
}

}  // namespace dlpbench
