#include "dlpbench/clustering/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "dlpbench/clustering/kmeans.hpp"
#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

/// Median of the off-diagonal dissimilarities, or 1 when it is zero.
double median_scale(const DissimilarityMatrix& d) {
    std::vector<double> v(d.condensed().begin(), d.condensed().end());
    if (v.empty()) return 1.0;
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    double med = *mid;
    if (v.size() % 2 == 0) med = 0.5 * (med + *std::max_element(v.begin(), mid));
    return med > 0.0 ? med : 1.0;
}

}  // namespace

SpectralResult spectral(const DissimilarityMatrix& d, int k, const Rng& rng, double delta0, unsigned threads) {
    const std::size_t n = d.size();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw InvalidParameter("spectral: k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    }
    if (!(delta0 > 0.0)) throw InvalidParameter("spectral: delta must be > 0");
    const double scale = 100.0 / median_scale(d);
    const auto ni = static_cast<Eigen::Index>(n);
    std::string last_reason = "no attempt";
    for (int attempt = 0; attempt < kSpectralAttempts; ++attempt) {
        const double delta = delta0 + 20.0 * attempt;
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(ni, ni);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double s = d(i, j) * scale;
                const double v = std::exp(-s * s / (2.0 * delta * delta));
                a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
                a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
            }
        }
        const Eigen::VectorXd degree = a.rowwise().sum();
        if (n > 1 && degree.minCoeff() < 1e-10) {
            last_reason = "an object has no affinity at delta " + std::to_string(delta);
            continue;
        }
        const Eigen::VectorXd inv_sqrt = degree.cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
        const Eigen::MatrixXd m = inv_sqrt.asDiagonal() * a * inv_sqrt.asDiagonal();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
        if (solver.info() != Eigen::Success) {
            last_reason = "eigen-decomposition did not converge at delta " + std::to_string(delta);
            continue;
        }
        // Largest eigenvalues of the normalised affinity are the smallest of
        // the normalised Laplacian I - M.
        const Eigen::MatrixXd u = solver.eigenvectors().rightCols(k);
        std::vector<std::vector<double>> rows(n, std::vector<double>(static_cast<std::size_t>(k)));
        bool degenerate = false;
        for (std::size_t i = 0; i < n && !degenerate; ++i) {
            const double norm = u.row(static_cast<Eigen::Index>(i)).norm();
            if (!(norm > 1e-12)) {
                degenerate = true;
                break;
            }
            for (int c = 0; c < k; ++c) rows[i][static_cast<std::size_t>(c)] = u(static_cast<Eigen::Index>(i), c) / norm;
        }
        if (degenerate) {
            last_reason = "zero embedding row at delta " + std::to_string(delta);
            continue;
        }
        SpectralResult out;
        out.partition = kmeans(rows, k, rng.split(static_cast<std::uint64_t>(attempt)), 10, 300, 1e-10, threads)
                            .partition;
        out.delta = delta;
        return out;
    }
    throw EigenFailure("spectral clustering failed for every kernel width: " + last_reason);
}

}  // namespace dlpbench
