// mcchan: experiment runner for the enzyme-assisted diffusive channel model.
//
// Subcommands:
//   analytic      evaluate the closed-form receiver counts at one point
//   uniform-test  deviation of the uniform-concentration approximation
//   simulate      particle simulation, per-trial receiver counts
//   accuracy      simulated mean vs analytic no-enzyme / lower-bound curves
//   homology      compare the dimensionless constants of two configs
//   peak          lower-bound peak time and amplitude

#include <cstdio>
#include <exception>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcchan/analytic.hpp"
#include "mcchan/config.hpp"
#include "mcchan/csv.hpp"
#include "mcchan/harness.hpp"
#include "mcchan/kernels.hpp"
#include "mcchan/svg.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string svg_path;
    std::string kernel = "auto";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 1;
    int trials = 0;  // 0 = config value
};

mcchan::RunConfig load_with_overrides(const CommonOpts& o) {
    mcchan::RunConfig rc = mcchan::load_config(o.config_path);
    if (o.seed_set) rc.seed = o.seed;
    if (o.trials > 0) rc.n_trials = o.trials;
    return rc;
}

mcchan::CsvMeta meta_for(const CommonOpts& o, const mcchan::RunConfig& rc) {
    mcchan::CsvMeta m;
    m.config_hash = mcchan::config_hash(mcchan::read_file(o.config_path));
    m.seed = rc.seed;
    m.constants = mcchan::dimensionless_constants(rc.to_system_params(), rc.to_reference_set());
    return m;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::fwrite(content.data(), 1, content.size(), stdout);
    else
        mcchan::write_file(path, content);
}

int cmd_analytic(double dist, double robs, double t, bool quadrature) {
    auto geom = mcchan::ReceiverGeometry::sphere(dist, robs);
    std::printf("t_star            %s\n", mcchan::format_g17(t).c_str());
    std::printf("uniform_count     %s\n",
                mcchan::format_g17(mcchan::uniform_count(geom, t)).c_str());
    std::printf("exact_count       %s\n",
                mcchan::format_g17(mcchan::sphere_count(dist, robs, t)).c_str());
    if (quadrature)
        std::printf("quadrature_count  %s\n",
                    mcchan::format_g17(mcchan::sphere_count_quadrature(dist, robs, t)).c_str());
    auto dev = mcchan::uniform_deviation(geom, t);
    if (dev)
        std::printf("uniform_deviation %s\n", mcchan::format_g17(*dev).c_str());
    else
        std::printf("uniform_deviation indeterminate\n");
    return 0;
}

int cmd_uniform_test(const CommonOpts& o, double rmax, double rstep, double tmin, double tmax,
                     int tpoints, const std::string& shape) {
    std::vector<double> r_obs;
    for (int i = 1; i * rstep <= rmax + 1e-12; ++i) r_obs.push_back(i * rstep);
    auto table = mcchan::run_uniform_test(r_obs, mcchan::log_spaced(tmin, tmax, tpoints));
    mcchan::CsvMeta meta;  // analytic only: no config, no seed
    bool sphere = shape == "sphere";
    emit(o.out_path, mcchan::render_deviation_csv(table, sphere, meta));
    if (!o.svg_path.empty()) {
        std::vector<mcchan::PlotSeries> series;
        const auto& grid = sphere ? table.sphere : table.cube;
        for (std::size_t i = 0; i < table.r_obs.size(); ++i) {
            mcchan::PlotSeries s;
            char label[32];
            std::snprintf(label, sizeof label, "r*=%.2f", table.r_obs[i]);
            s.label = label;
            for (const auto& d : grid[i])
                s.y.push_back(d ? *d : std::numeric_limits<double>::quiet_NaN());
            series.push_back(std::move(s));
        }
        emit(o.svg_path, mcchan::render_line_plot_svg("uniform-assumption deviation (" + shape + ")",
                                                      table.t_star, series));
    }
    return 0;
}

int cmd_simulate(const CommonOpts& o) {
    auto rc = load_with_overrides(o);
    auto cfg = rc.to_sim_config();
    auto series = mcchan::run_batch(cfg, rc.n_trials, o.threads);
    auto meta = meta_for(o, rc);
    std::string out;
    out += "# config_hash=" + std::to_string(meta.config_hash) +
           " seed=" + std::to_string(meta.seed) + "\n";
    out += "trial,t_star,t_seconds,count\n";
    for (std::size_t tr = 0; tr < series.counts.size(); ++tr)
        for (std::size_t i = 0; i < series.t_star.size(); ++i)
            out += std::to_string(tr) + "," + mcchan::format_g17(series.t_star[i]) + "," +
                   mcchan::format_g17(series.t_seconds[i]) + "," +
                   std::to_string(series.counts[tr][i]) + "\n";
    emit(o.out_path, out);
    return 0;
}

int cmd_accuracy(const CommonOpts& o) {
    auto rc = load_with_overrides(o);
    auto curve = mcchan::run_accuracy(rc.to_sim_config(), rc.n_trials, o.threads);
    emit(o.out_path, mcchan::render_timeseries_csv(curve, meta_for(o, rc)));
    if (!o.svg_path.empty()) {
        std::vector<mcchan::PlotSeries> series{{"simulated mean", curve.mean_star},
                                               {"no enzymes", curve.no_enzyme_star},
                                               {"lower bound", curve.lower_bound_star}};
        emit(o.svg_path,
             mcchan::render_line_plot_svg("receiver count (dimensionless)", curve.sim.t_star,
                                          series));
    }
    return 0;
}

int cmd_homology(const std::string& path_a, const std::string& path_b, double rel_tol) {
    auto a = mcchan::load_config(path_a);
    auto b = mcchan::load_config(path_b);
    auto rep = mcchan::run_homology_check(a.to_system_params(), a.to_reference_set(),
                                          b.to_system_params(), b.to_reference_set(), rel_tol);
    std::fputs(mcchan::render_homology_report(rep).c_str(), stdout);
    return rep.homologous ? 0 : 1;
}

int cmd_peak(const CommonOpts& o) {
    auto rc = load_with_overrides(o);
    auto p = rc.to_system_params();
    auto peak = mcchan::lower_bound_peak(p, rc.to_reference_set());
    std::printf("t_max_us    %s\n", mcchan::format_g17(peak.t_max * 1e6).c_str());
    std::printf("peak_count  %s\n", mcchan::format_g17(peak.peak_count).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enzyme-assisted diffusive channel experiments"};
    app.require_subcommand(1);

    CommonOpts o;
    double an_dist = 1, an_robs = 0.15, an_t = 1.0 / 6.0;
    bool an_quad = false;
    double ut_rmax = 0.5, ut_step = 0.05, ut_tmin = 0.01, ut_tmax = 10;
    int ut_points = 200;
    std::string ut_shape = "sphere", hom_a, hom_b;
    double hom_tol = 1e-9;

    auto add_common = [&](CLI::App* c, bool needs_config) {
        if (needs_config)
            c->add_option("--config", o.config_path, "config file")->required()
                ->check(CLI::ExistingFile);
        c->add_option("--out", o.out_path, "output path ('-' = stdout)");
        c->add_option("--svg", o.svg_path, "also render an SVG plot");
        c->add_option("--seed", o.seed, "override config seed")
            ->each([&](const std::string&) { o.seed_set = true; });
        c->add_option("--trials", o.trials, "override config trial count");
        c->add_option("--threads", o.threads, "worker pool size")->check(CLI::PositiveNumber);
        c->add_option("--kernel", o.kernel, "inner-loop variant: auto, scalar, avx2")
            ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
    };

    auto* an = app.add_subcommand("analytic", "closed-form counts at one (d, r*, t*) point");
    an->add_option("--dist", an_dist, "transmitter-receiver distance (dimensionless)");
    an->add_option("--robs", an_robs, "receiver sphere radius (dimensionless)");
    an->add_option("--t", an_t, "dimensionless time");
    an->add_flag("--quadrature", an_quad, "also run the quadrature oracle");

    auto* ut = app.add_subcommand("uniform-test", "uniform-assumption deviation table");
    add_common(ut, false);
    ut->add_option("--rmax", ut_rmax, "largest receiver radius");
    ut->add_option("--step", ut_step, "radius increment");
    ut->add_option("--tmin", ut_tmin);
    ut->add_option("--tmax", ut_tmax);
    ut->add_option("--points", ut_points, "log-grid size in t*");
    ut->add_option("--shape", ut_shape)->check(CLI::IsMember({"sphere", "cube"}));

    auto* sim = app.add_subcommand("simulate", "per-trial receiver counts");
    add_common(sim, true);
    auto* acc = app.add_subcommand("accuracy", "simulated mean with analytic bounds");
    add_common(acc, true);

    auto* hom = app.add_subcommand("homology", "dimensional-homology verdict for two configs");
    hom->add_option("--config-a", hom_a)->required()->check(CLI::ExistingFile);
    hom->add_option("--config-b", hom_b)->required()->check(CLI::ExistingFile);
    hom->add_option("--rel-tol", hom_tol);

    auto* pk = app.add_subcommand("peak", "lower-bound peak time and amplitude");
    add_common(pk, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        mcchan::kernels::select(o.kernel);
        if (an->parsed()) return cmd_analytic(an_dist, an_robs, an_t, an_quad);
        if (ut->parsed())
            return cmd_uniform_test(o, ut_rmax, ut_step, ut_tmin, ut_tmax, ut_points, ut_shape);
        if (sim->parsed()) return cmd_simulate(o);
        if (acc->parsed()) return cmd_accuracy(o);
        if (hom->parsed()) return cmd_homology(hom_a, hom_b, hom_tol);
        if (pk->parsed()) return cmd_peak(o);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
