#include "mcchan/harness.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace mcchan {

Aggregate aggregate(const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) throw std::invalid_argument("aggregate: no rows");
    const std::size_t m = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != m) throw std::invalid_argument("aggregate: mismatched row lengths");
    const double n = static_cast<double>(rows.size());
    Aggregate out;
    out.mean.assign(m, 0.0);
    out.std_err.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double sum = 0;
        for (const auto& r : rows) sum += static_cast<double>(r[j]);
        double mean = sum / n;
        out.mean[j] = mean;
        if (rows.size() > 1) {
            double ss = 0;
            for (const auto& r : rows) {
                double d = static_cast<double>(r[j]) - mean;
                ss += d * d;
            }
            out.std_err[j] = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
        }
    }
    return out;
}

ObservationSeries run_batch(const SimConfig& cfg, int n_trials, int n_threads) {
    if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
    cfg.validate();
    n_threads = std::max(1, n_threads);

    std::vector<TrialRow> rows(n_trials);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n_trials) return;
            rows[i] = run_trial(cfg, static_cast<std::uint64_t>(i));
        }
    };
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ObservationSeries series;
    series.n_trials = n_trials;
    series.t_seconds = rows[0].realized_times;
    series.t_star.reserve(series.t_seconds.size());
    for (double t : series.t_seconds)
        series.t_star.push_back(nondim(Quantity::Time, SpeciesTag::A, t, cfg.refs, cfg.params));
    series.counts.reserve(n_trials);
    for (auto& r : rows) series.counts.push_back(std::move(r.counts));
    Aggregate agg = aggregate(series.counts);
    series.mean = std::move(agg.mean);
    series.std_err = std::move(agg.std_err);
    return series;
}

AccuracyCurve run_accuracy(const SimConfig& cfg, int n_trials, int n_threads) {
    AccuracyCurve curve;
    curve.sim = run_batch(cfg, n_trials, n_threads);
    curve.constants = dimensionless_constants(cfg.params, cfg.refs);
    curve.n_a = cfg.params.n_a;

    const double n_a = cfg.params.n_a;
    LowerBoundParams with_enz{curve.constants.gamma_1a_bound,
                              cfg.params.receiver.center_distance, cfg.params.receiver.volume()};
    LowerBoundParams no_enz{0.0, with_enz.dist, with_enz.volume};
    for (std::size_t j = 0; j < curve.sim.t_star.size(); ++j) {
        double t = curve.sim.t_star[j];
        curve.mean_star.push_back(curve.sim.mean[j] / n_a);
        curve.std_err_star.push_back(curve.sim.std_err[j] / n_a);
        if (t > 0) {
            curve.no_enzyme_star.push_back(enzyme_lower_bound_count(no_enz, t));
            curve.lower_bound_star.push_back(enzyme_lower_bound_count(with_enz, t));
        } else {
            curve.no_enzyme_star.push_back(0.0);
            curve.lower_bound_star.push_back(0.0);
        }
    }
    return curve;
}

DeviationTable run_uniform_test(const std::vector<double>& r_obs,
                                const std::vector<double>& t_star_grid) {
    DeviationTable table;
    table.t_star = t_star_grid;
    table.r_obs = r_obs;
    for (double r : r_obs) {
        if (!(r > 0 && r < 1)) throw std::invalid_argument("r_obs* must be in (0, 1)");
        auto sphere = ReceiverGeometry::sphere(1.0, r);
        double side = std::cbrt(sphere.volume());
        auto cube = ReceiverGeometry::box(1.0 - 0.5 * side, 1.0 + 0.5 * side, -0.5 * side,
                                          0.5 * side, -0.5 * side, 0.5 * side);
        std::vector<std::optional<double>> srow, crow;
        for (double t : t_star_grid) {
            srow.push_back(uniform_deviation(sphere, t));
            crow.push_back(uniform_deviation(cube, t));
        }
        table.sphere.push_back(std::move(srow));
        table.cube.push_back(std::move(crow));
    }
    return table;
}

HomologyReport run_homology_check(const SystemParams& pa, const ReferenceSet& ra,
                                  const SystemParams& pb, const ReferenceSet& rb,
                                  double rel_tol) {
    HomologyReport rep;
    rep.a = dimensionless_constants(pa, ra);
    rep.b = dimensionless_constants(pb, rb);
    auto rel = [](double x, double y) {
        if (x == 0.0 && y == 0.0) return 0.0;
        return std::fabs(x - y) / std::max(std::fabs(x), std::fabs(y));
    };
    rep.rel_diff = {rel(rep.a.gamma_1a, rep.b.gamma_1a), rel(rep.a.gamma_2a, rep.b.gamma_2a),
                    rel(rep.a.gamma_e, rep.b.gamma_e), rel(rep.a.gamma_ea, rep.b.gamma_ea),
                    rel(rep.a.gamma_1a_bound, rep.b.gamma_1a_bound)};
    rep.max_rel_diff = *std::max_element(rep.rel_diff.begin(), rep.rel_diff.end());
    rep.homologous = is_homologous(rep.a, rep.b, rel_tol);
    return rep;
}

GapStats relative_gap(const AccuracyCurve& curve, double t_lo, double t_hi) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < curve.sim.t_star.size(); ++j) {
        double t = curve.sim.t_star[j];
        if (t >= t_lo && t <= t_hi && curve.lower_bound_star[j] > 0) idx.push_back(j);
    }
    if (idx.empty()) throw std::invalid_argument("relative_gap: no sample times in window");

    const auto& counts = curve.sim.counts;
    std::vector<double> per_trial;
    per_trial.reserve(counts.size());
    for (const auto& row : counts) {
        double acc = 0;
        for (std::size_t j : idx)
            acc += static_cast<double>(row[j]) / (curve.n_a * curve.lower_bound_star[j]) - 1.0;
        per_trial.push_back(acc / static_cast<double>(idx.size()));
    }
    GapStats g;
    double sum = 0;
    for (double v : per_trial) sum += v;
    g.mean = sum / static_cast<double>(per_trial.size());
    if (per_trial.size() > 1) {
        double ss = 0;
        for (double v : per_trial) ss += (v - g.mean) * (v - g.mean);
        g.std_err = std::sqrt(ss / (per_trial.size() - 1.0)) /
                    std::sqrt(static_cast<double>(per_trial.size()));
    }
    return g;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (n < 2 || lo <= 0 || hi <= lo) throw std::invalid_argument("log_spaced: bad arguments");
    std::vector<double> out(n);
    double llo = std::log10(lo), lhi = std::log10(hi);
    for (int i = 0; i < n; ++i)
        out[i] = std::pow(10.0, llo + (lhi - llo) * i / (n - 1));
    return out;
}

}  // namespace mcchan
