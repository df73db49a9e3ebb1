#pragma once

// Experiment orchestration: trial batches with a deterministic reduction,
// aggregation, the uniform-assumption deviation table, accuracy experiments
// pairing simulated curves with their analytic bounds, and homology reports.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mcchan/analytic.hpp"
#include "mcchan/simulator.hpp"

namespace mcchan {

struct Aggregate {
    std::vector<double> mean;
    std::vector<double> std_err;  // sample stdev / sqrt(n)
};

// rows: [trial][sample]; throws std::invalid_argument on empty or ragged input.
Aggregate aggregate(const std::vector<std::vector<std::int64_t>>& rows);

struct ObservationSeries {
    std::vector<double> t_seconds;  // realized, step-aligned
    std::vector<double> t_star;     // A-species dimensionless time
    std::vector<std::vector<std::int64_t>> counts;  // [trial][sample]
    std::vector<double> mean;       // molecules
    std::vector<double> std_err;    // molecules
    int n_trials = 0;
};

// Trials fan out to a worker pool; each owns its stream and slot, so the
// result is identical for any worker count.
ObservationSeries run_batch(const SimConfig& cfg, int n_trials, int n_threads = 1);

struct AccuracyCurve {
    ObservationSeries sim;
    std::vector<double> mean_star;            // sim.mean / N_A
    std::vector<double> std_err_star;
    std::vector<double> no_enzyme_star;       // uniform estimate, C_Etot = 0
    std::vector<double> lower_bound_star;     // enzyme lower bound
    DimensionlessConstants constants{};
    double n_a = 1;                           // molecules per emission

};

AccuracyCurve run_accuracy(const SimConfig& cfg, int n_trials, int n_threads = 1);

struct DeviationTable {
    std::vector<double> t_star;
    std::vector<double> r_obs;
    // [r][t]; empty optional where the exact count underflows
    std::vector<std::vector<std::optional<double>>> sphere;
    std::vector<std::vector<std::optional<double>>> cube;  // volume-matched, same center
};

// Purely analytic; receivers centered at dimensionless distance 1.
DeviationTable run_uniform_test(const std::vector<double>& r_obs,
                                const std::vector<double>& t_star_grid);

struct HomologyReport {
    DimensionlessConstants a{}, b{};
    std::array<double, 5> rel_diff{};  // gamma_1a, gamma_2a, gamma_e, gamma_ea, gamma_1a_bound
    double max_rel_diff = 0;
    bool homologous = false;
};

HomologyReport run_homology_check(const SystemParams& pa, const ReferenceSet& ra,
                                  const SystemParams& pb, const ReferenceSet& rb,
                                  double rel_tol = 1e-9);

struct GapStats {
    double mean = 0;     // time-averaged (sim - bound)/bound
    double std_err = 0;  // over per-trial time averages
};

// Gap to the lower bound averaged over sample times with t* in [t_lo, t_hi].
GapStats relative_gap(const AccuracyCurve& curve, double t_lo, double t_hi);

std::vector<double> log_spaced(double lo, double hi, int n);

}  // namespace mcchan
