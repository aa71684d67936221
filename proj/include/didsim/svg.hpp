#ifndef DIDSIM_SVG_HPP
#define DIDSIM_SVG_HPP

#include <string>
#include <vector>

namespace didsim {

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> yerr;  // optional CI whiskers, empty = none
    bool dashed = false;
};

struct SvgPlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = true;
    std::vector<SvgSeries> series;
};

// Self-contained SVG line plot, no external assets.
void write_svg_plot(const std::string& path, const SvgPlotSpec& spec);

}  // namespace didsim

#endif
