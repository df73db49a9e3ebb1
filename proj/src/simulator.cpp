#include "mcchan/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "mcchan/kernels.hpp"

namespace mcchan {

double SimConfig::binding_radius() const {
    return std::cbrt(3.0 * params.rates.k1 * dt / (4.0 * M_PI));
}

void SimConfig::validate() const {
    params.validate(refs.distance);
    if (dt <= 0) throw std::invalid_argument("dt must be > 0");
    if (refs.distance <= 0 || refs.conc_a <= 0 || refs.n_ref <= 0)
        throw std::invalid_argument("reference set must be positive");
    double v_enz = params.enz_box_side * params.enz_box_side * params.enz_box_side;
    if (std::fabs(refs.conc_e_tot * v_enz - params.n_e) >
        1e-9 * std::max(1.0, params.n_e))
        throw std::invalid_argument("refs.conc_e_tot inconsistent with n_E / V_enz");
    double prev = 0;
    for (double t : sample_times) {
        if (t <= prev) throw std::invalid_argument("sample_times must be strictly increasing and > 0");
        prev = t;
    }
    // validity of the per-step binding-volume model
    double rms = std::sqrt(6.0 * params.species_a.diffusion * dt);
    if (params.rates.k1 > 0 && binding_radius() >= rms)
        throw std::invalid_argument("binding radius must stay below the per-step rms displacement of A");
}

SimState init_sim(const SimConfig& cfg, std::uint64_t trial_index) {
    cfg.validate();
    SimState st;
    st.rng = Xoshiro256(cfg.seed, trial_index);

    auto n_a = static_cast<std::size_t>(std::llround(cfg.params.n_a));
    auto n_e = static_cast<std::size_t>(std::llround(cfg.params.n_e));
    st.ax.assign(n_a, 0.0);
    st.ay.assign(n_a, 0.0);
    st.az.assign(n_a, 0.0);

    const double side = cfg.params.enz_box_side;
    st.ex.resize(n_e);
    st.ey.resize(n_e);
    st.ez.resize(n_e);
    for (std::size_t i = 0; i < n_e; ++i) {
        st.ex[i] = (st.rng.uniform() - 0.5) * side;
        st.ey[i] = (st.rng.uniform() - 0.5) * side;
        st.ez[i] = (st.rng.uniform() - 0.5) * side;
    }
    return st;
}

namespace {

void diffuse_species(SimState& st, std::vector<double>& x, std::vector<double>& y,
                     std::vector<double>& z, double diffusion, double dt) {
    const std::size_t n = x.size();
    if (n == 0) return;
    const double sigma = std::sqrt(2.0 * diffusion * dt);
    st.noise.resize(3 * n);
    st.rng.fill_normal(st.noise.data(), 3 * n);
    const auto& k = kernels::active();
    k.scaled_add(x.data(), st.noise.data(), sigma, n);
    k.scaled_add(y.data(), st.noise.data() + n, sigma, n);
    k.scaled_add(z.data(), st.noise.data() + 2 * n, sigma, n);
}

inline double fold(double v, double lo, double hi) {
    double len = hi - lo;
    double two_len = 2.0 * len;
    double d = v - lo;
    double p = d - two_len * std::floor(d / two_len);
    double y = p <= len ? p : two_len - p;
    return lo + std::min(std::max(y, 0.0), len);
}

template <typename... Vec>
void swap_remove(std::size_t i, Vec&... vec) {
    ((vec[i] = vec.back(), vec.pop_back()), ...);
}

}  // namespace

void diffuse(SimState& st, const SimConfig& cfg) {
    diffuse_species(st, st.ax, st.ay, st.az, cfg.params.species_a.diffusion, cfg.dt);
    diffuse_species(st, st.ex, st.ey, st.ez, cfg.params.species_e.diffusion, cfg.dt);
    diffuse_species(st, st.eax, st.eay, st.eaz, cfg.params.species_ea.diffusion, cfg.dt);
}

void apply_boundaries(SimState& st, const SimConfig& cfg) {
    const double half = 0.5 * cfg.params.enz_box_side;
    const auto& k = kernels::active();
    k.reflect_into_interval(st.ex.data(), st.ex.size(), -half, half);
    k.reflect_into_interval(st.ey.data(), st.ey.size(), -half, half);
    k.reflect_into_interval(st.ez.data(), st.ez.size(), -half, half);

    // EA crossing the wall decomposes: enzyme reflected back inside, free A
    // left at the crossing-adjusted (outside) position.
    for (std::size_t i = 0; i < st.eax.size();) {
        double x = st.eax[i], y = st.eay[i], z = st.eaz[i];
        bool outside = x < -half || x > half || y < -half || y > half || z < -half || z > half;
        if (!outside) {
            ++i;
            continue;
        }
        st.ex.push_back(fold(x, -half, half));
        st.ey.push_back(fold(y, -half, half));
        st.ez.push_back(fold(z, -half, half));
        st.ax.push_back(x);
        st.ay.push_back(y);
        st.az.push_back(z);
        swap_remove(i, st.eax, st.eay, st.eaz);
    }
}

void react_unimolecular(SimState& st, const SimConfig& cfg) {
    const double k_off = cfg.params.rates.k_minus1 + cfg.params.rates.k2;
    if (k_off <= 0 || st.eax.empty()) return;
    const double p_react = 1.0 - std::exp(-k_off * cfg.dt);
    const double p_unbind = cfg.params.rates.k_minus1 / k_off;  // gamma_2a
    const double r_b = cfg.binding_radius();

    for (std::size_t i = 0; i < st.eax.size();) {
        if (st.rng.uniform() >= p_react) {
            ++i;
            continue;
        }
        double x = st.eax[i], y = st.eay[i], z = st.eaz[i];
        st.ex.push_back(x);
        st.ey.push_back(y);
        st.ez.push_back(z);
        if (st.rng.uniform() < p_unbind) {
            if (cfg.unbind_colocated) {
                st.ax.push_back(x);
                st.ay.push_back(y);
                st.az.push_back(z);
            } else {
                // uniform direction; slight push past r_B so the release is not
                // recaptured in this step's binding pass
                double ux, uy, uz, norm2;
                do {
                    ux = st.rng.normal();
                    uy = st.rng.normal();
                    uz = st.rng.normal();
                    norm2 = ux * ux + uy * uy + uz * uz;
                } while (norm2 < 1e-12);
                double scale = r_b * (1.0 + 1e-9) / std::sqrt(norm2);
                st.ax.push_back(x + scale * ux);
                st.ay.push_back(y + scale * uy);
                st.az.push_back(z + scale * uz);
            }
        } else {
            ++st.n_degraded;
        }
        swap_remove(i, st.eax, st.eay, st.eaz);
    }
}

void react_bimolecular(SimState& st, const SimConfig& cfg) {
    const double r_b = cfg.binding_radius();
    if (r_b <= 0 || st.ex.empty() || st.ax.empty()) return;
    const double r_b2 = r_b * r_b;
    const double half = 0.5 * cfg.params.enz_box_side;
    const double lo = -half - r_b;
    const double span = 2.0 * (half + r_b);

    // uniform grid over the container (expanded by r_B), cell size >= r_B
    const std::size_t n_e = st.ex.size();
    int ncell = static_cast<int>(
        std::min<double>(std::floor(span / r_b),
                         2.0 * std::ceil(std::cbrt(static_cast<double>(std::max<std::size_t>(n_e, 8))))));
    ncell = std::max(ncell, 1);
    const double cell = span / ncell;
    const std::size_t total_cells = static_cast<std::size_t>(ncell) * ncell * ncell;

    auto cell_index_1d = [&](double v) {
        int c = static_cast<int>((v - lo) / cell);
        return std::min(std::max(c, 0), ncell - 1);
    };

    st.cell_of.resize(n_e);
    st.cell_start.assign(total_cells + 1, 0);
    st.cell_items.resize(n_e);
    st.e_bound.assign(n_e, 0);
    for (std::size_t i = 0; i < n_e; ++i) {
        std::uint32_t c = static_cast<std::uint32_t>(
            (cell_index_1d(st.ex[i]) * ncell + cell_index_1d(st.ey[i])) * ncell +
            cell_index_1d(st.ez[i]));
        st.cell_of[i] = c;
        ++st.cell_start[c + 1];
    }
    for (std::size_t c = 0; c < total_cells; ++c) st.cell_start[c + 1] += st.cell_start[c];
    {
        std::vector<std::uint32_t> cursor(st.cell_start.begin(), st.cell_start.end() - 1);
        for (std::size_t i = 0; i < n_e; ++i)
            st.cell_items[cursor[st.cell_of[i]]++] = static_cast<std::uint32_t>(i);
    }

    // nearest eligible enzyme per A, in A index order
    std::vector<std::pair<std::size_t, std::size_t>> bindings;  // (a index, e index)
    for (std::size_t a = 0; a < st.ax.size(); ++a) {
        double x = st.ax[a], y = st.ay[a], z = st.az[a];
        if (x < lo || x > -lo || y < lo || y > -lo || z < lo || z > -lo) continue;
        int cx = cell_index_1d(x), cy = cell_index_1d(y), cz = cell_index_1d(z);
        double best = r_b2;
        std::size_t best_e = SIZE_MAX;
        for (int ix = std::max(cx - 1, 0); ix <= std::min(cx + 1, ncell - 1); ++ix)
            for (int iy = std::max(cy - 1, 0); iy <= std::min(cy + 1, ncell - 1); ++iy)
                for (int iz = std::max(cz - 1, 0); iz <= std::min(cz + 1, ncell - 1); ++iz) {
                    std::size_t c = static_cast<std::size_t>((ix * ncell + iy) * ncell + iz);
                    for (std::uint32_t k = st.cell_start[c]; k < st.cell_start[c + 1]; ++k) {
                        std::uint32_t e = st.cell_items[k];
                        if (st.e_bound[e]) continue;
                        double dx = st.ex[e] - x, dy = st.ey[e] - y, dz = st.ez[e] - z;
                        double d2 = dx * dx + dy * dy + dz * dz;
                        if (d2 < best) {
                            best = d2;
                            best_e = e;
                        }
                    }
                }
        if (best_e != SIZE_MAX) {
            st.e_bound[best_e] = 1;
            bindings.emplace_back(a, best_e);
        }
    }
    if (bindings.empty()) return;

    // EA forms at the enzyme position
    for (auto [a, e] : bindings) {
        st.eax.push_back(st.ex[e]);
        st.eay.push_back(st.ey[e]);
        st.eaz.push_back(st.ez[e]);
    }
    // compact bound molecules out, highest index first so stored indices stay valid
    std::vector<std::size_t> a_gone, e_gone;
    for (auto [a, e] : bindings) {
        a_gone.push_back(a);
        e_gone.push_back(e);
    }
    std::sort(a_gone.rbegin(), a_gone.rend());
    std::sort(e_gone.rbegin(), e_gone.rend());
    for (std::size_t a : a_gone) swap_remove(a, st.ax, st.ay, st.az);
    for (std::size_t e : e_gone) swap_remove(e, st.ex, st.ey, st.ez);
}

void advance(SimState& st, const SimConfig& cfg) {
    diffuse(st, cfg);
    apply_boundaries(st, cfg);
    react_unimolecular(st, cfg);
    react_bimolecular(st, cfg);
    ++st.step_index;
}

std::int64_t observe(const SimState& st, const ReceiverGeometry& receiver,
                     const ReferenceSet& refs, const SystemParams& params) {
    const double l = refs.distance;
    const auto& k = kernels::active();
    if (auto* s = std::get_if<ReceiverGeometry::Sphere>(&receiver.shape)) {
        double dn = std::sqrt(params.rx_direction[0] * params.rx_direction[0] +
                              params.rx_direction[1] * params.rx_direction[1] +
                              params.rx_direction[2] * params.rx_direction[2]);
        double cd = receiver.center_distance * l / dn;
        double r = s->radius * l;
        return static_cast<std::int64_t>(
            k.count_in_sphere(st.ax.data(), st.ay.data(), st.az.data(), st.ax.size(),
                              cd * params.rx_direction[0], cd * params.rx_direction[1],
                              cd * params.rx_direction[2], r * r));
    }
    auto& b = std::get<ReceiverGeometry::Box>(receiver.shape);
    double lo[3] = {b.xi * l, b.yi * l, b.zi * l};
    double hi[3] = {b.xf * l, b.yf * l, b.zf * l};
    return static_cast<std::int64_t>(
        k.count_in_box(st.ax.data(), st.ay.data(), st.az.data(), st.ax.size(), lo, hi));
}

std::vector<std::uint64_t> sample_steps_for(const SimConfig& cfg) {
    std::vector<std::uint64_t> steps;
    steps.reserve(cfg.sample_times.size());
    for (double t : cfg.sample_times)
        steps.push_back(static_cast<std::uint64_t>(std::llround(t / cfg.dt)));
    return steps;
}

TrialRow run_trial(const SimConfig& cfg, std::uint64_t trial_index) {
    SimState st = init_sim(cfg, trial_index);
    auto steps = sample_steps_for(cfg);
    TrialRow row;
    row.realized_times.reserve(steps.size());
    row.counts.reserve(steps.size());
    std::size_t si = 0;
    auto record = [&]() {
        row.realized_times.push_back(static_cast<double>(st.step_index) * cfg.dt);
        row.counts.push_back(observe(st, cfg.params.receiver, cfg.refs, cfg.params));
    };
    while (si < steps.size() && steps[si] == 0) {
        record();
        ++si;
    }
    if (si == steps.size()) return row;
    const std::uint64_t last = steps.back();
    while (st.step_index < last) {
        advance(st, cfg);
        while (si < steps.size() && steps[si] == st.step_index) {
            record();
            ++si;
        }
    }
    return row;
}

}  // namespace mcchan
