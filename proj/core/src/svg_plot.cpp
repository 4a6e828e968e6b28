#include "aphidcount/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace aphid {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 400;
constexpr int kMarginLeft = 50;
constexpr int kMarginRight = 120;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 40;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_line_chart(const std::vector<PlotSeries>& series, const std::string& title) {
    std::size_t n = 0;
    for (const auto& s : series) n = std::max(n, s.values.size());
    if (n < 1) throw std::invalid_argument("render_line_chart: no data");

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto x_at = [&](std::size_t i) {
        return n == 1 ? kMarginLeft + plot_w / 2.0
                      : kMarginLeft + plot_w * static_cast<double>(i) / (n - 1);
    };
    auto y_at = [&](double v) {
        return kMarginTop + plot_h * (1.0 - std::clamp(v, 0.0, 1.0));
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
           "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 " +
           std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + std::to_string(kWidth / 2) +
           "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
           title + "</text>\n";

    // Axes and gridlines at y = 0, 0.5, 1.
    for (double tick : {0.0, 0.5, 1.0}) {
        const std::string y = num(y_at(tick));
        svg += "<line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" + y + "\" x2=\"" +
               num(kMarginLeft + plot_w) + "\" y2=\"" + y +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + std::to_string(kMarginLeft - 8) + "\" y=\"" + num(y_at(tick) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(tick) +
               "</text>\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
        svg += "<text x=\"" + num(x_at(i)) + "\" y=\"" +
               std::to_string(kHeight - kMarginBottom + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               std::to_string(i) + "</text>\n";
    }
    svg += "<line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" + num(y_at(0.0)) +
           "\" x2=\"" + num(kMarginLeft + plot_w) + "\" y2=\"" + num(y_at(0.0)) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" + num(y_at(1.0)) +
           "\" x2=\"" + std::to_string(kMarginLeft) + "\" y2=\"" + num(y_at(0.0)) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    int legend_y = kMarginTop + 10;
    for (const auto& s : series) {
        if (!s.values.empty()) {
            std::string points;
            for (std::size_t i = 0; i < s.values.size(); ++i) {
                if (i) points += ' ';
                points += num(x_at(i)) + "," + num(y_at(s.values[i]));
            }
            svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + s.color +
                   "\" stroke-width=\"2\"/>\n";
            for (std::size_t i = 0; i < s.values.size(); ++i)
                svg += "<circle cx=\"" + num(x_at(i)) + "\" cy=\"" + num(y_at(s.values[i])) +
                       "\" r=\"2.5\" fill=\"" + s.color + "\"/>\n";
        }
        svg += "<line x1=\"" + num(kMarginLeft + plot_w + 16) + "\" y1=\"" +
               std::to_string(legend_y) + "\" x2=\"" + num(kMarginLeft + plot_w + 40) +
               "\" y2=\"" + std::to_string(legend_y) + "\" stroke=\"" + s.color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(kMarginLeft + plot_w + 46) + "\" y=\"" +
               std::to_string(legend_y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + s.label + "</text>\n";
        legend_y += 20;
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace aphid
