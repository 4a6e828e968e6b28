#pragma once

#include <string>
#include <vector>

namespace aphid {

struct PlotSeries {
    std::string label;
    std::string color; ///< any SVG color literal
    std::vector<double> values;
};

/// Minimal deterministic line chart: every series shares the x axis
/// 0..n-1 (frame index) and a y axis spanning [0, 1] (values are clipped).
/// Output is a standalone <svg> document, byte-stable for equal input.
std::string render_line_chart(const std::vector<PlotSeries>& series, const std::string& title);

} // namespace aphid
