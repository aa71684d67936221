#include "didsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "didsim/errors.hpp"

namespace didsim {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 200.0;  // room for the legend
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

void write_svg_plot(const std::string& path, const SvgPlotSpec& spec) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open output file \"" + path + "\"");

    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (const SvgSeries& s : spec.series) {
        for (double v : s.x) {
            xmin = std::min(xmin, v);
            xmax = std::max(xmax, v);
        }
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            double e = i < s.yerr.size() ? s.yerr[i] : 0.0;
            double lo = s.y[i] - e;
            double hi = s.y[i] + e;
            if (spec.log_y && lo <= 0.0) lo = s.y[i];
            ymin = std::min(ymin, lo);
            ymax = std::max(ymax, hi);
        }
    }
    if (!(xmax > xmin)) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (!(ymax > ymin)) {
        ymin *= 0.5;
        ymax = ymax == 0.0 ? 1.0 : ymax * 2.0;
    }

    double lymin = spec.log_y ? std::log10(ymin) : ymin;
    double lymax = spec.log_y ? std::log10(ymax) : ymax;
    double pad = 0.05 * (lymax - lymin);
    lymin -= pad;
    lymax += pad;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto map_x = [&](double v) { return kLeft + (v - xmin) / (xmax - xmin) * plot_w; };
    auto map_y = [&](double v) {
        double t = spec.log_y ? std::log10(v) : v;
        return kTop + (lymax - t) / (lymax - lymin) * plot_h;
    };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
           "font-family=\"sans-serif\">"
        << spec.title << "</text>\n";

    // frame
    out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
        << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

    // x ticks: up to 8 evenly spaced
    int nx = 8;
    for (int i = 0; i <= nx; ++i) {
        double v = xmin + (xmax - xmin) * i / nx;
        double px = map_x(v);
        out << "<line x1=\"" << px << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << px << "\" y2=\""
            << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << px << "\" y=\"" << kTop + plot_h + 20
            << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(v)
            << "</text>\n";
    }

    // y ticks: decades when log, 6 linear ticks otherwise
    if (spec.log_y) {
        int d0 = static_cast<int>(std::ceil(lymin));
        int d1 = static_cast<int>(std::floor(lymax));
        for (int d = d0; d <= d1; ++d) {
            double py = kTop + (lymax - d) / (lymax - lymin) * plot_h;
            out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py << "\" x2=\"" << kLeft
                << "\" y2=\"" << py << "\" stroke=\"black\"/>\n"
                << "<line x1=\"" << kLeft << "\" y1=\"" << py << "\" x2=\"" << kLeft + plot_w
                << "\" y2=\"" << py << "\" stroke=\"#dddddd\"/>\n"
                << "<text x=\"" << kLeft - 8 << "\" y=\"" << py + 4
                << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">1e" << d
                << "</text>\n";
        }
    } else {
        for (int i = 0; i <= 6; ++i) {
            double v = lymin + (lymax - lymin) * i / 6.0;
            double py = kTop + (lymax - v) / (lymax - lymin) * plot_h;
            out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py << "\" x2=\"" << kLeft
                << "\" y2=\"" << py << "\" stroke=\"black\"/>\n"
                << "<text x=\"" << kLeft - 8 << "\" y=\"" << py + 4
                << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(v)
                << "</text>\n";
        }
    }

    out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 14
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << spec.x_label
        << "</text>\n"
        << "<text x=\"20\" y=\"" << kTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 20 "
        << kTop + plot_h / 2 << ")\">" << spec.y_label << "</text>\n";

    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const SvgSeries& s = spec.series[si];
        const char* color = kPalette[si % 6];

        std::ostringstream points;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) points << ' ';
            points << fmt(map_x(s.x[i])) << ',' << fmt(map_y(s.y[i]));
        }
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\""
            << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << " points=\"" << points.str()
            << "\"/>\n";

        for (std::size_t i = 0; i < s.x.size(); ++i) {
            double px = map_x(s.x[i]);
            out << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(map_y(s.y[i]))
                << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
            if (i < s.yerr.size() && s.yerr[i] > 0.0) {
                double lo = s.y[i] - s.yerr[i];
                double hi = s.y[i] + s.yerr[i];
                if (spec.log_y && lo <= 0.0) continue;
                out << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(map_y(lo)) << "\" x2=\""
                    << fmt(px) << "\" y2=\"" << fmt(map_y(hi)) << "\" stroke=\"" << color
                    << "\"/>\n"
                    << "<line x1=\"" << fmt(px - 3) << "\" y1=\"" << fmt(map_y(lo)) << "\" x2=\""
                    << fmt(px + 3) << "\" y2=\"" << fmt(map_y(lo)) << "\" stroke=\"" << color
                    << "\"/>\n"
                    << "<line x1=\"" << fmt(px - 3) << "\" y1=\"" << fmt(map_y(hi)) << "\" x2=\""
                    << fmt(px + 3) << "\" y2=\"" << fmt(map_y(hi)) << "\" stroke=\"" << color
                    << "\"/>\n";
            }
        }

        double ly = kTop + 16.0 + 18.0 * static_cast<double>(si);
        double lx = kLeft + plot_w + 14.0;
        out << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 24 << "\" y2=\""
            << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"1.8\""
            << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n"
            << "<text x=\"" << lx + 30 << "\" y=\"" << ly
            << "\" font-size=\"11\" font-family=\"sans-serif\">" << s.label << "</text>\n";
    }

    out << "</svg>\n";
}

}  // namespace didsim
