#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <limits>
#include <ostream>

#include "shellpol/cli.hpp"

namespace shellpol::cli {

namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 90, kRight = 160, kTop = 40, kBottom = 60;
constexpr std::array<const char*, 6> kColors = {"#000000", "#1f77b4", "#d62728",
                                                "#2ca02c", "#9467bd", "#ff7f0e"};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_svg(std::ostream& os, const PlotSpec& plot, const std::vector<Series>& series) {
    const auto ty = [&](double y) { return plot.log_y ? std::log10(y) : y; };
    const auto usable = [&](double y) { return std::isfinite(y) && (!plot.log_y || y > 0.0); };

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!usable(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, ty(s.y[i]));
            ymax = std::max(ymax, ty(s.y[i]));
        }
    }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;

    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    const auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    const auto py = [&](double y) { return kTop + (1.0 - (ty(y) - ymin) / (ymax - ymin)) * ph; };

    fmt::print(os,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
               "font-family=\"sans-serif\" font-size=\"12\">\n",
               kWidth, kHeight);
    fmt::print(os, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    fmt::print(os, "<text x=\"{}\" y=\"24\" font-size=\"15\">{}</text>\n", kLeft, escape(plot.title));
    fmt::print(os, "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
               kLeft, kTop, pw, ph);

    for (int i = 0; i <= 5; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 5.0;
        const double gx = kLeft + pw * i / 5.0;
        fmt::print(os, "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", gx,
                   kTop + ph, kTop + ph + 5);
        fmt::print(os, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{:.3g}</text>\n", gx,
                   kTop + ph + 18, fx);
        const double fy = ymin + (ymax - ymin) * i / 5.0;
        const double gy = kTop + ph * (1.0 - i / 5.0);
        fmt::print(os, "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n",
                   kLeft - 5, gy, kLeft);
        fmt::print(os, "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{:.3g}</text>\n", kLeft - 8,
                   gy + 4, plot.log_y ? std::pow(10.0, fy) : fy);
    }
    fmt::print(os, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", kLeft + pw / 2,
               kHeight - 15, escape(plot.x_label));
    fmt::print(os,
               "<text x=\"20\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0})\">{1}</text>\n",
               kTop + ph / 2, escape(plot.y_label));

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kColors[k % kColors.size()];
        std::string points;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!usable(s.y[i])) continue;
            points += fmt::format("{:.2f},{:.2f} ", px(s.x[i]), py(s.y[i]));
        }
        fmt::print(os, "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                   color, points);
        const double ly = kTop + 15 + 18 * k;
        fmt::print(os, "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"2\"/>\n",
                   kWidth - kRight + 15, ly, kWidth - kRight + 40, color);
        fmt::print(os, "<text x=\"{}\" y=\"{}\">{}</text>\n", kWidth - kRight + 46, ly + 4,
                   escape(s.label));
    }
    os << "</svg>\n";
}

}  // namespace shellpol::cli
