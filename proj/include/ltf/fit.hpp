#pragma once

#include <span>

#include <Eigen/Dense>

#include "ltf/error.hpp"

namespace ltf {

/// y ~ exp(intercept) * x^slope.
struct PowerFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS residual in log space
};

/// Ordinary least squares of log y on [1, log x]. Needs positive data and at
/// least two distinct x values.
template <typename Scalar>
PowerFit fit_power_law(std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != y.size()) throw InvalidInput("fit needs as many y values as x values");
    if (x.size() < 2) throw InvalidInput("fit needs at least two points");
    const auto n = static_cast<Eigen::Index>(x.size());
    Eigen::Matrix<Scalar, Eigen::Dynamic, 2> design(n, 2);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> target(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto xi = x[static_cast<std::size_t>(i)];
        const auto yi = y[static_cast<std::size_t>(i)];
        if (!(xi > 0) || !(yi > 0)) throw InvalidInput("power-law fit needs positive x and y");
        design(i, 0) = Scalar(1);
        design(i, 1) = std::log(xi);
        target(i) = std::log(yi);
    }
    if (design.col(1).maxCoeff() == design.col(1).minCoeff())
        throw InvalidInput("fit needs at least two distinct x values");
    const Eigen::Matrix<Scalar, 2, 1> coef = design.colPivHouseholderQr().solve(target);
    const auto resid = (design * coef - target).norm() / std::sqrt(static_cast<Scalar>(n));
    return PowerFit{static_cast<double>(coef(1)), static_cast<double>(coef(0)), static_cast<double>(resid)};
}

}  // namespace ltf
