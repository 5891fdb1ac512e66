#pragma once

#include <string>
#include <vector>

namespace darkwave {

// Minimal line-chart SVG writer for trajectory/sweep plots.
struct SvgSeries {
    std::vector<double> x, y;
    std::string color = "#1f77b4";
    std::string label;
};

std::string svg_line_chart(const std::vector<SvgSeries>& series,
                           const std::string& x_label,
                           const std::string& y_label,
                           const std::string& title, int width = 720,
                           int height = 420);

}  // namespace darkwave
