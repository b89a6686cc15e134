// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

namespace tafnoise {

/// Locally weighted polynomial regression (tricube weights, optional
/// inverse-variance weighting on top). The curve keeps its own copy of the
/// data and refits at every query point, so it is evaluable at arbitrary x.
/// Exactly reproduces polynomial data of order <= degree.
class LoessCurve {
public:
    LoessCurve(Eigen::ArrayXd x, Eigen::ArrayXd y, Eigen::ArrayXd weight,
               double span, int degree);

    double operator()(double x) const;
    Eigen::ArrayXd operator()(const Eigen::ArrayXd& xs) const;

    double span() const { return span_; }
    int degree() const { return degree_; }

private:
    Eigen::ArrayXd x_, y_, w_;
    double span_;
    int degree_;
    Eigen::Index neighborhood_;
};

/// sigma may be empty (unweighted) or hold per-point 1-sigma errors.
/// span is the fraction of points entering each local fit, in (0, 1].
LoessCurve loess_smooth(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                        const Eigen::ArrayXd& sigma, double span,
                        int degree = 2);

}  // namespace tafnoise
