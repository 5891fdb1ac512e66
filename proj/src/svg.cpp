#include "darkwave/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace darkwave {

std::string svg_line_chart(const std::vector<SvgSeries>& series,
                           const std::string& x_label, const std::string& y_label,
                           const std::string& title, int width, int height) {
    double x0 = std::numeric_limits<double>::max(), x1 = -x0;
    double y0 = x0, y1 = -x0;
    for (const auto& s : series)
        for (size_t i = 0; i < s.x.size(); ++i) {
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    if (!(x1 > x0)) x1 = x0 + 1.0;
    if (!(y1 > y0)) y1 = y0 + 1.0;
    const double pad_y = 0.06 * (y1 - y0);
    y0 -= pad_y;
    y1 += pad_y;

    const int ml = 64, mr = 16, mt = 32, mb = 44;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double x) { return ml + pw * (x - x0) / (x1 - x0); };
    auto py = [&](double y) { return mt + ph * (1.0 - (y - y0) / (y1 - y0)); };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-size=\"14\">" << title << "</text>\n";
    // axes
    o << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
      << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    o << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << mt + ph << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x0 + (x1 - x0) * i / 4;
        const double yv = y0 + (y1 - y0) * i / 4;
        o << "<text x=\"" << px(xv) << "\" y=\"" << mt + ph + 16
          << "\" text-anchor=\"middle\" font-size=\"10\">" << std::scientific
          << xv << "</text>\n";
        o << "<text x=\"" << ml - 6 << "\" y=\"" << py(yv) + 3
          << "\" text-anchor=\"end\" font-size=\"10\">" << yv << "</text>\n";
    }
    o << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 8
      << "\" text-anchor=\"middle\" font-size=\"12\">" << x_label << "</text>\n";
    o << "<text x=\"14\" y=\"" << mt + ph / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 14 "
      << mt + ph / 2 << ")\">" << y_label << "</text>\n";

    int li = 0;
    for (const auto& s : series) {
        o << "<polyline fill=\"none\" stroke=\"" << s.color
          << "\" stroke-width=\"1.4\" points=\"";
        for (size_t i = 0; i < s.x.size(); ++i)
            o << px(s.x[i]) << "," << py(s.y[i]) << " ";
        o << "\"/>\n";
        if (!s.label.empty()) {
            o << "<text x=\"" << ml + pw - 6 << "\" y=\"" << mt + 14 + 14 * li
              << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << s.color
              << "\">" << s.label << "</text>\n";
            ++li;
        }
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace darkwave
