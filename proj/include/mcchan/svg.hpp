#pragma once

// Minimal static log-x line plot, purely a convenience renderer of CSV data.

#include <string>
#include <vector>

namespace mcchan {

struct PlotSeries {
    std::string label;
    std::vector<double> y;  // same length as x
};

std::string render_line_plot_svg(const std::string& title, const std::vector<double>& x,
                                 const std::vector<PlotSeries>& series, bool log_x = true);

}  // namespace mcchan
