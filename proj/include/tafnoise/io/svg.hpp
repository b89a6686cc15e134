// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace tafnoise::io {

struct PlotSeries {
    std::string label;
    Eigen::ArrayXd x;
    Eigen::ArrayXd y;
    bool markers = true;
    bool line = true;
};

struct PlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    int width = 720;
    int height = 480;
};

/// Standalone SVG with one <circle> marker per data point and the raw
/// values embedded as comments. Output is byte-deterministic for identical
/// input.
std::string render_svg(const std::vector<PlotSeries>& series,
                       const PlotOptions& options);

}  // namespace tafnoise::io
