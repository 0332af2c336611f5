#include "dlpbench/stats/correlation.hpp"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/dissimilarity/lockstep.hpp"

namespace dlpbench {

TestResult correlation(std::span<const double> x, std::span<const double> y, CorrelationKind kind) {
    if (x.size() != y.size()) throw LengthMismatch("correlation inputs differ in length");
    if (x.size() < 3) throw InvalidParameter("correlation needs at least 3 pairs");
    double r = 0.0;
    if (kind == CorrelationKind::Pearson) {
        r = pearson_r(x, y);
    } else {
        const auto rx = average_ranks(x);
        const auto ry = average_ranks(y);
        r = pearson_r(rx, ry);
    }
    const double df = static_cast<double>(x.size()) - 2.0;
    if (std::abs(r) >= 1.0) return {r, 0.0};
    const double t = r * std::sqrt(df / (1.0 - r * r));
    const boost::math::students_t dist(df);
    return {r, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)))};
}

}  // namespace dlpbench
