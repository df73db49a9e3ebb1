#include "mcchan/csv.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace mcchan {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string header_comment(const CsvMeta& meta) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "# config_hash=%016" PRIx64 " seed=%" PRIu64 "\n"
                  "# gamma_1a=%.17g gamma_2a=%.17g gamma_e=%.17g gamma_ea=%.17g "
                  "gamma_1a_bound=%.17g\n",
                  meta.config_hash, meta.seed, meta.constants.gamma_1a, meta.constants.gamma_2a,
                  meta.constants.gamma_e, meta.constants.gamma_ea,
                  meta.constants.gamma_1a_bound);
    return buf;
}

}  // namespace

std::string render_timeseries_csv(const AccuracyCurve& curve, const CsvMeta& meta) {
    std::ostringstream out;
    out << header_comment(meta);
    out << "t_star,t_seconds,mean_count_star,std_err_star,analytic_no_enzyme_star,"
           "analytic_lower_bound_star,n_trials\n";
    for (std::size_t j = 0; j < curve.sim.t_star.size(); ++j) {
        out << format_g17(curve.sim.t_star[j]) << ',' << format_g17(curve.sim.t_seconds[j]) << ','
            << format_g17(curve.mean_star[j]) << ',' << format_g17(curve.std_err_star[j]) << ','
            << format_g17(curve.no_enzyme_star[j]) << ',' << format_g17(curve.lower_bound_star[j])
            << ',' << curve.sim.n_trials << '\n';
    }
    return out.str();
}

std::string render_deviation_csv(const DeviationTable& table, bool sphere_shape,
                                 const CsvMeta& meta) {
    const auto& dev = sphere_shape ? table.sphere : table.cube;
    std::ostringstream out;
    out << header_comment(meta);
    out << "t_star";
    for (double r : table.r_obs) {
        char buf[32];
        std::snprintf(buf, sizeof buf, ",r_%g", r);  // column label, not data
        out << buf;
    }
    out << '\n';
    for (std::size_t j = 0; j < table.t_star.size(); ++j) {
        out << format_g17(table.t_star[j]);
        for (std::size_t i = 0; i < table.r_obs.size(); ++i) {
            out << ',';
            if (dev[i][j]) out << format_g17(*dev[i][j]);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_homology_report(const HomologyReport& rep) {
    static const char* names[] = {"gamma_1a", "gamma_2a", "gamma_e", "gamma_ea",
                                  "gamma_1a_bound"};
    const double* va[] = {&rep.a.gamma_1a, &rep.a.gamma_2a, &rep.a.gamma_e, &rep.a.gamma_ea,
                          &rep.a.gamma_1a_bound};
    const double* vb[] = {&rep.b.gamma_1a, &rep.b.gamma_2a, &rep.b.gamma_e, &rep.b.gamma_ea,
                          &rep.b.gamma_1a_bound};
    std::ostringstream out;
    out << "constant,system_a,system_b,rel_diff\n";
    for (int i = 0; i < 5; ++i)
        out << names[i] << ',' << format_g17(*va[i]) << ',' << format_g17(*vb[i]) << ','
            << format_g17(rep.rel_diff[i]) << '\n';
    out << "verdict," << (rep.homologous ? "homologous" : "not_homologous") << ",,"
        << format_g17(rep.max_rel_diff) << '\n';
    return out.str();
}

}  // namespace mcchan
