#include "mcchan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mcchan {
namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 440;
constexpr int kMargin = 56;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                         "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string render_line_plot_svg(const std::string& title, const std::vector<double>& x,
                                 const std::vector<PlotSeries>& series, bool log_x) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (double v : x) {
        double t = log_x ? std::log10(v) : v;
        if (std::isfinite(t)) xmin = std::min(xmin, t), xmax = std::max(xmax, t);
    }
    for (const auto& s : series)
        for (double v : s.y)
            if (std::isfinite(v)) ymin = std::min(ymin, v), ymax = std::max(ymax, v);
    if (!(xmax > xmin)) xmax = xmin + 1;
    if (!(ymax > ymin)) ymax = ymin + 1;

    auto px = [&](double v) {
        double t = log_x ? std::log10(v) : v;
        return kMargin + (t - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin);
    };
    auto py = [&](double v) {
        return kHeight - kMargin - (v - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
        << title << "</text>\n";
    out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
        << "\" height=\"" << kHeight - 2 * kMargin
        << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";

    int ci = 0;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << kColors[ci % 10]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.y[i])) continue;
            out << px(x[i]) << ',' << py(s.y[i]) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << kMargin + 8 << "\" y=\"" << kMargin + 16 * (ci + 1)
            << "\" font-size=\"11\" fill=\"" << kColors[ci % 10] << "\">" << s.label
            << "</text>\n";
        ++ci;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace mcchan
