// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tafnoise/types.hpp"

#include <utility>
#include <vector>

namespace tafnoise {

/// Upper-tail survival probability of the chi-square distribution:
/// P(X > chi2) for X ~ chi2(dof).
double chi2_survival(double chi2, int dof);

/// One-sided upper tail of Student's t distribution: P(T > t).
double student_t_sf(double t, int dof);

/// Two-sided Kolmogorov-Smirnov p-value of samples against U(0,1).
double ks_uniform_pvalue(std::vector<double> samples);

struct TTestResult {
    double t = 0;
    double mean_delta = 0;
    double mean_delta_err = 0;        // standard error of the weighted mean
    double weighted_std = 0;          // weighted sample standard deviation
    double confidence_two_sided = 0;  // rejection confidence of mean == 0
    int n = 0;
};

/// Paired test for a change in the frequency-scaling exponent. Each pair is
/// (alpha at low temperature, alpha at high temperature), both with 1-sigma
/// errors; delta = low - high, so a decrease at high temperature is
/// positive. Weights are inverse-variance in the per-pair delta errors
/// (unit weights when any delta error is zero). t is the weighted mean over
/// its standard error; all-zero deltas give t = 0, while nonzero identical
/// deltas (zero variance) raise FitDegenerateError.
TTestResult t_test_delta_alpha(
    const std::vector<std::pair<ValueWithError, ValueWithError>>& pairs);

}  // namespace tafnoise
