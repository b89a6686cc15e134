// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/stats.hpp"

#include "tafnoise/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tafnoise {

namespace {

constexpr double rel_eps = 1e-14;
constexpr double tiny = 1e-300;

// regularized lower incomplete gamma P(a,x) by its power series
double gamma_p_series(double a, double x)
{
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * rel_eps)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// regularized upper incomplete gamma Q(a,x) by continued fraction (Lentz)
double gamma_q_cf(double a, double x)
{
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < rel_eps)
            break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_q(double a, double x)
{
    if (x < 0 || a <= 0)
        throw InvalidInputError("incomplete gamma needs x >= 0, a > 0");
    if (x == 0)
        return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

// continued fraction for the regularized incomplete beta (Lentz)
double beta_cf(double a, double b, double x)
{
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny)
        d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny)
            d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny)
            d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < rel_eps)
            break;
    }
    return h;
}

double incomplete_beta(double a, double b, double x)
{
    if (x <= 0)
        return 0.0;
    if (x >= 1)
        return 1.0;
    const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) -
                               std::lgamma(b) + a * std::log(x) +
                               b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0))
        return bt * beta_cf(a, b, x) / a;
    return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

// Kolmogorov distribution tail Q_KS(lambda) = 2 sum (-1)^{j-1} e^{-2 j^2 l^2}
double kolmogorov_q(double lambda)
{
    if (lambda < 1e-8)
        return 1.0;
    double sum = 0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        if (term < 1e-16)
            break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

double chi2_survival(double chi2, int dof)
{
    if (dof < 1)
        throw InvalidInputError("chi-square needs dof >= 1");
    if (!(chi2 >= 0))
        throw InvalidInputError("chi-square statistic must be non-negative");
    return gamma_q(0.5 * dof, 0.5 * chi2);
}

double student_t_sf(double t, int dof)
{
    if (dof < 1)
        throw InvalidInputError("t distribution needs dof >= 1");
    const double x = dof / (dof + t * t);
    const double half_tail = 0.5 * incomplete_beta(0.5 * dof, 0.5, x);
    return t >= 0 ? half_tail : 1.0 - half_tail;
}

double ks_uniform_pvalue(std::vector<double> samples)
{
    const auto n = samples.size();
    if (n < 2)
        throw InvalidInputError("KS test needs at least 2 samples");
    std::sort(samples.begin(), samples.end());
    double d = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (samples[i] < 0 || samples[i] > 1)
            throw InvalidInputError("samples must lie in [0, 1]");
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max({d, samples[i] - lo, hi - samples[i]});
    }
    const double sn = std::sqrt(static_cast<double>(n));
    return kolmogorov_q((sn + 0.12 + 0.11 / sn) * d);
}

TTestResult t_test_delta_alpha(
    const std::vector<std::pair<ValueWithError, ValueWithError>>& pairs)
{
    const auto n = pairs.size();
    if (n < 2)
        throw InvalidInputError("t-test needs at least 2 pairs");

    std::vector<double> delta(n), var(n);
    bool weighted = true;
    for (std::size_t i = 0; i < n; ++i) {
        delta[i] = pairs[i].first.value - pairs[i].second.value;
        var[i] = pairs[i].first.error * pairs[i].first.error +
                 pairs[i].second.error * pairs[i].second.error;
        if (!(var[i] > 0))
            weighted = false;
    }

    double wsum = 0, mean = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = weighted ? 1.0 / var[i] : 1.0;
        wsum += w;
        mean += w * delta[i];
    }
    mean /= wsum;

    double wvar = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = weighted ? 1.0 / var[i] : 1.0;
        wvar += w * (delta[i] - mean) * (delta[i] - mean);
    }
    wvar = wvar / wsum * (static_cast<double>(n) / (n - 1.0));

    TTestResult r;
    r.n = static_cast<int>(n);
    r.mean_delta = mean;
    r.weighted_std = std::sqrt(wvar);
    r.mean_delta_err = r.weighted_std / std::sqrt(static_cast<double>(n));

    if (r.weighted_std == 0) {
        if (mean == 0) {
            r.t = 0;
            r.confidence_two_sided = 0;
            return r;
        }
        throw FitDegenerateError(
            "zero variance across samples with nonzero mean");
    }
    r.t = mean / r.mean_delta_err;
    r.confidence_two_sided =
        1.0 - 2.0 * student_t_sf(std::abs(r.t), static_cast<int>(n) - 1);
    return r;
}

}  // namespace tafnoise
