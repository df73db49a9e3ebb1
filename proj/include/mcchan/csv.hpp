#pragma once

// CSV emission. Deterministic output: \n line endings, '.' decimal separator,
// 17 significant digits for floating values, and a header comment carrying
// the config hash, seed, and dimensionless constants.

#include <cstdint>
#include <string>

#include "mcchan/harness.hpp"

namespace mcchan {

struct CsvMeta {
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
    DimensionlessConstants constants{};
};

std::string format_g17(double v);

// t_star,t_seconds,mean_count_star,std_err_star,analytic_no_enzyme_star,
// analytic_lower_bound_star,n_trials
std::string render_timeseries_csv(const AccuracyCurve& curve, const CsvMeta& meta);

// t_star then one deviation column per r*; indeterminate entries are empty.
std::string render_deviation_csv(const DeviationTable& table, bool sphere_shape,
                                 const CsvMeta& meta);

std::string render_homology_report(const HomologyReport& rep);

}  // namespace mcchan
