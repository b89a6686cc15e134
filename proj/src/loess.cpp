// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/loess.hpp"

#include "tafnoise/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace tafnoise {

LoessCurve::LoessCurve(Eigen::ArrayXd x, Eigen::ArrayXd y,
                       Eigen::ArrayXd weight, double span, int degree)
    : x_(std::move(x)),
      y_(std::move(y)),
      w_(std::move(weight)),
      span_(span),
      degree_(degree)
{
    const Eigen::Index n = x_.size();
    neighborhood_ = std::max<Eigen::Index>(
        static_cast<Eigen::Index>(std::ceil(span_ * static_cast<double>(n))),
        degree_ + 2);
    neighborhood_ = std::min(neighborhood_, n);
}

double LoessCurve::operator()(double x) const
{
    const Eigen::Index n = x_.size();
    const Eigen::Index q = neighborhood_;

    // q nearest points by |x_i - x|
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::nth_element(idx.begin(), idx.begin() + (q - 1), idx.end(),
                     [&](Eigen::Index a, Eigen::Index b) {
                         return std::abs(x_[a] - x) < std::abs(x_[b] - x);
                     });
    idx.resize(static_cast<std::size_t>(q));

    double dmax = 0;
    for (const auto i : idx)
        dmax = std::max(dmax, std::abs(x_[i] - x));

    // weighted design matrix in centred powers
    Eigen::MatrixXd A(q, degree_ + 1);
    Eigen::VectorXd b(q);
    for (Eigen::Index r = 0; r < q; ++r) {
        const Eigen::Index i = idx[static_cast<std::size_t>(r)];
        double tricube = 1.0;
        if (dmax > 0) {
            const double u = std::abs(x_[i] - x) / dmax;
            const double t = 1.0 - u * u * u;
            tricube = t * t * t;
        }
        const double wt = std::sqrt(std::max(tricube * w_[i], 0.0));
        double pow_dx = 1.0;
        for (int p = 0; p <= degree_; ++p) {
            A(r, p) = wt * pow_dx;
            pow_dx *= x_[i] - x;
        }
        b[r] = wt * y_[i];
    }

    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (qr.rank() < degree_ + 1) {
        // degenerate neighbourhood (replicated x values): weighted mean
        double num = 0, den = 0;
        for (Eigen::Index r = 0; r < q; ++r) {
            num += A(r, 0) * b[r];
            den += A(r, 0) * A(r, 0);
        }
        if (den == 0)
            throw FitDegenerateError("all local weights vanished");
        return num / den;
    }
    const Eigen::VectorXd coef = qr.solve(b);
    return coef[0];  // value of the centred polynomial at x
}

Eigen::ArrayXd LoessCurve::operator()(const Eigen::ArrayXd& xs) const
{
    Eigen::ArrayXd out(xs.size());
    for (Eigen::Index i = 0; i < xs.size(); ++i)
        out[i] = (*this)(xs[i]);
    return out;
}

LoessCurve loess_smooth(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                        const Eigen::ArrayXd& sigma, double span, int degree)
{
    if (!(span > 0.0 && span <= 1.0))
        throw InvalidInputError("span must lie in (0, 1]");
    if (degree < 0)
        throw InvalidInputError("degree must be non-negative");
    if (x.size() != y.size())
        throw InvalidInputError("x and y lengths differ");
    if (x.size() < degree + 2)
        throw InvalidInputError("need at least degree+2 points");

    Eigen::ArrayXd w;
    if (sigma.size() == 0) {
        w = Eigen::ArrayXd::Ones(x.size());
    } else {
        if (sigma.size() != x.size())
            throw InvalidInputError("sigma length differs from data");
        if ((sigma <= 0).any())
            throw InvalidInputError("sigmas must be positive");
        w = 1.0 / (sigma * sigma);
    }
    return LoessCurve(x, y, std::move(w), span, degree);
}

}  // namespace tafnoise
