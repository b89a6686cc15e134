// SPDX-License-Identifier: Apache-2.0
#include "tafnoise/io/svg.hpp"

#include "tafnoise/errors.hpp"
#include "tafnoise/io/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tafnoise::io {

namespace {

constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#ff7f0e", "#9467bd", "#8c564b"};

std::string px(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& s)
{
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Axis {
    double lo = 0, hi = 1;
    bool log = false;

    double map(double v, double pixel_lo, double pixel_hi) const
    {
        const double t = log ? (std::log10(v) - lo) / (hi - lo)
                             : (v - lo) / (hi - lo);
        return pixel_lo + t * (pixel_hi - pixel_lo);
    }

    std::vector<double> ticks() const
    {
        std::vector<double> out;
        if (log) {
            for (int d = static_cast<int>(std::floor(lo));
                 d <= static_cast<int>(std::ceil(hi)); ++d)
                if (d >= lo - 1e-9 && d <= hi + 1e-9)
                    out.push_back(std::pow(10.0, d));
            if (out.size() < 2) {
                out = {std::pow(10.0, lo), std::pow(10.0, hi)};
            }
            return out;
        }
        const double span = hi - lo;
        const double raw = span / 5.0;
        const double mag = std::pow(10.0, std::floor(std::log10(raw)));
        double step = mag;
        for (const double m : {1.0, 2.0, 5.0, 10.0}) {
            if (raw <= m * mag) {
                step = m * mag;
                break;
            }
        }
        const double first = std::ceil(lo / step) * step;
        for (double v = first; v <= hi + 1e-9 * span; v += step)
            out.push_back(v);
        return out;
    }
};

Axis make_axis(double lo, double hi, bool log, const char* name)
{
    if (log) {
        if (!(lo > 0))
            throw InvalidInputError(std::string(name) +
                                    " axis: log scale requires positive data");
        lo = std::log10(lo);
        hi = std::log10(hi);
    }
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    } else {
        const double pad = 0.05 * (hi - lo);
        lo -= pad;
        hi += pad;
    }
    return {lo, hi, log};
}

}  // namespace

std::string render_svg(const std::vector<PlotSeries>& series,
                       const PlotOptions& options)
{
    if (series.empty())
        throw InvalidInputError("nothing to plot");
    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    bool first = true;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size())
            throw InvalidInputError("series '" + s.label +
                                    "': x and y lengths differ");
        if (s.x.size() == 0)
            throw InvalidInputError("series '" + s.label + "' is empty");
        if (first) {
            x_min = s.x.minCoeff();
            x_max = s.x.maxCoeff();
            y_min = s.y.minCoeff();
            y_max = s.y.maxCoeff();
            first = false;
        } else {
            x_min = std::min(x_min, s.x.minCoeff());
            x_max = std::max(x_max, s.x.maxCoeff());
            y_min = std::min(y_min, s.y.minCoeff());
            y_max = std::max(y_max, s.y.maxCoeff());
        }
    }

    const Axis ax = make_axis(x_min, x_max, options.log_x, "x");
    const Axis ay = make_axis(y_min, y_max, options.log_y, "y");

    const double W = options.width, H = options.height;
    const double ml = 72, mr = 24, mt = options.title.empty() ? 24 : 44,
                 mb = 56;
    const double plot_x0 = ml, plot_x1 = W - mr;
    const double plot_y0 = H - mb, plot_y1 = mt;  // y grows upward

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 "
        << options.width << " " << options.height << "\">\n";

    // embedded data for traceability
    for (const auto& s : series) {
        svg << "<!-- data \"" << escape_xml(s.label) << "\":";
        for (Eigen::Index i = 0; i < s.x.size(); ++i)
            svg << ' ' << format_number(s.x[i]) << ',' << format_number(s.y[i]);
        svg << " -->\n";
    }

    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty())
        svg << "<text x=\"" << px(W / 2) << "\" y=\"24\" text-anchor=\"middle\""
            << " font-family=\"sans-serif\" font-size=\"16\">"
            << escape_xml(options.title) << "</text>\n";

    // frame
    svg << "<rect x=\"" << px(plot_x0) << "\" y=\"" << px(plot_y1)
        << "\" width=\"" << px(plot_x1 - plot_x0) << "\" height=\""
        << px(plot_y0 - plot_y1)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // ticks and labels
    for (const double v : ax.ticks()) {
        const double X = ax.map(v, plot_x0, plot_x1);
        if (X < plot_x0 - 0.5 || X > plot_x1 + 0.5)
            continue;
        svg << "<line x1=\"" << px(X) << "\" y1=\"" << px(plot_y0)
            << "\" x2=\"" << px(X) << "\" y2=\"" << px(plot_y0 + 5)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << px(X) << "\" y=\"" << px(plot_y0 + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << format_number(v) << "</text>\n";
    }
    for (const double v : ay.ticks()) {
        const double Y = ay.map(v, plot_y0, plot_y1);
        if (Y > plot_y0 + 0.5 || Y < plot_y1 - 0.5)
            continue;
        svg << "<line x1=\"" << px(plot_x0 - 5) << "\" y1=\"" << px(Y)
            << "\" x2=\"" << px(plot_x0) << "\" y2=\"" << px(Y)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << px(plot_x0 - 8) << "\" y=\"" << px(Y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << format_number(v) << "</text>\n";
    }
    if (!options.x_label.empty())
        svg << "<text x=\"" << px((plot_x0 + plot_x1) / 2) << "\" y=\""
            << px(H - 12) << "\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"13\">"
            << escape_xml(options.x_label) << "</text>\n";
    if (!options.y_label.empty())
        svg << "<text x=\"16\" y=\"" << px((plot_y0 + plot_y1) / 2)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"13\" transform=\"rotate(-90 16 "
            << px((plot_y0 + plot_y1) / 2) << ")\">"
            << escape_xml(options.y_label) << "</text>\n";

    // series
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = palette[k % (sizeof palette / sizeof *palette)];
        if (s.line && s.x.size() > 1) {
            svg << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\" points=\"";
            for (Eigen::Index i = 0; i < s.x.size(); ++i)
                svg << px(ax.map(s.x[i], plot_x0, plot_x1)) << ','
                    << px(ay.map(s.y[i], plot_y0, plot_y1))
                    << (i + 1 < s.x.size() ? " " : "");
            svg << "\"/>\n";
        }
        if (s.markers) {
            for (Eigen::Index i = 0; i < s.x.size(); ++i)
                svg << "<circle cx=\"" << px(ax.map(s.x[i], plot_x0, plot_x1))
                    << "\" cy=\"" << px(ay.map(s.y[i], plot_y0, plot_y1))
                    << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        if (!s.label.empty()) {
            // legend swatches are rects so <circle> elements map 1:1 to
            // data points
            const double ly = plot_y1 + 16 + 16 * static_cast<double>(k);
            svg << "<rect x=\"" << px(plot_x1 - 134) << "\" y=\""
                << px(ly - 8) << "\" width=\"8\" height=\"8\" fill=\"" << color
                << "\"/>\n"
                << "<text x=\"" << px(plot_x1 - 120) << "\" y=\"" << px(ly)
                << "\" font-family=\"sans-serif\" font-size=\"11\">"
                << escape_xml(s.label) << "</text>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace tafnoise::io
