#include "dlpbench/representation/pca.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

PcaModel pca_fit(std::span<const std::vector<double>> rows, std::size_t n_c) {
    if (rows.empty()) throw EmptyInput("pca_fit on an empty dataset");
    const std::size_t d = rows.front().size();
    if (n_c < 1 || n_c > d) throw InvalidParameter("pca: n_c " + std::to_string(n_c) + " outside [1, " + std::to_string(d) + "]");
    if (rows.size() < n_c) throw InvalidParameter("pca: dataset smaller than n_c");
    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto dim = static_cast<Eigen::Index>(d);

    Eigen::MatrixXd x(n, dim);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& r = rows[static_cast<std::size_t>(i)];
        if (r.size() != d) throw LengthMismatch("pca rows have different lengths");
        for (Eigen::Index j = 0; j < dim; ++j) x(i, j) = r[static_cast<std::size_t>(j)];
    }
    const Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;
    const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
    const Eigen::MatrixXd cov = (x.transpose() * x) / denom;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
    if (eig.info() != Eigen::Success) throw EigenFailure("pca: covariance eigen-decomposition failed");

    PcaModel model;
    model.requested = n_c;
    model.mean.assign(mean.data(), mean.data() + dim);
    // Eigen returns ascending eigenvalues; walk from the top.
    const double top = std::max(eig.eigenvalues()(dim - 1), 0.0);
    const double tol = 1e-12 * std::max(top, 1.0);
    for (Eigen::Index c = dim - 1; c >= 0 && model.components.size() < n_c; --c) {
        const double value = eig.eigenvalues()(c);
        if (value <= tol) {
            model.degenerate = true;
            break;
        }
        Eigen::VectorXd axis = eig.eigenvectors().col(c);
        Eigen::Index arg = 0;
        axis.cwiseAbs().maxCoeff(&arg);
        if (axis(arg) < 0.0) axis = -axis;
        model.components.emplace_back(axis.data(), axis.data() + dim);
        model.explained_variance.push_back(value);
    }
    return model;
}

PcaModel pca_fit(std::span<const TimeSeries> series, std::size_t n_c) {
    std::vector<std::vector<double>> rows;
    rows.reserve(series.size());
    for (const auto& s : series) rows.emplace_back(s.values().begin(), s.values().end());
    return pca_fit(rows, n_c);
}

FeatureVector pca_apply(const PcaModel& model, std::span<const double> x) {
    if (x.size() != model.mean.size()) throw LengthMismatch("pca_apply: input length does not match the model");
    FeatureVector out;
    out.values.reserve(model.components.size());
    for (const auto& axis : model.components) {
        double dot = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) dot += axis[j] * (x[j] - model.mean[j]);
        out.values.push_back(dot);
    }
    return out;
}

}  // namespace dlpbench
