// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tafnoise {

/// Base class of everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input data violates a documented precondition (bad values, bad ordering).
struct InvalidInputError : Error {
    using Error::Error;
};

/// A run/solver configuration is unusable (e.g. undersampled simulation).
struct InvalidConfigError : Error {
    using Error::Error;
};

/// The requested evaluation point lies outside the model's validity regime
/// (e.g. omega*tau0 >= 1, where the dominant-energy log is undefined).
struct OutOfRegimeError : Error {
    using Error::Error;
};

/// Derivative stencil undefined at the edge of a sampled curve.
struct BoundaryError : Error {
    using Error::Error;
};

/// A fit has no usable solution (degenerate design, all-zero amplitudes,
/// zero variance in a statistic).
struct FitDegenerateError : Error {
    using Error::Error;
};

/// Numerical procedure failed to converge; `diagnostics` carries the
/// residual profile or whatever evidence the solver had at the end.
struct NumericalError : Error {
    explicit NumericalError(const std::string& what, std::string diag = {})
        : Error(what), diagnostics(std::move(diag))
    {
    }
    std::string diagnostics;
};

/// Malformed input file; `line` is 1-based within the file.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line_number)
        : Error(what + " (line " + std::to_string(line_number) + ")"),
          line(line_number)
    {
    }
    std::size_t line;
};

}  // namespace tafnoise
