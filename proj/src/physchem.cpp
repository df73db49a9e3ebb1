#include "mcchan/physchem.hpp"

#include <cmath>
#include <string>

namespace mcchan {

double stokes_einstein(const Medium& medium, double radius) {
    if (medium.temperature <= 0) throw std::domain_error("temperature must be > 0");
    if (medium.viscosity <= 0) throw std::domain_error("viscosity must be > 0");
    if (radius <= 0) throw std::domain_error("radius must be > 0");
    return k_boltzmann * medium.temperature / (6.0 * M_PI * medium.viscosity * radius);
}

void SystemParams::validate(double ref_distance) const {
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (medium.temperature <= 0) fail("temperature must be > 0");
    if (medium.viscosity <= 0) fail("viscosity must be > 0");
    for (auto [sp, name] : {std::pair{&species_a, "A"}, {&species_e, "E"}, {&species_ea, "EA"}}) {
        if (sp->radius <= 0) fail(std::string("species ") + name + " radius must be > 0");
        if (sp->diffusion <= 0) fail(std::string("species ") + name + " diffusion must be > 0");
    }
    if (rates.k1 < 0 || rates.k_minus1 < 0 || rates.k2 < 0) fail("reaction rates must be >= 0");
    if (n_a < 1) fail("n_A must be >= 1");
    if (n_e < 0) fail("n_E must be >= 0");
    if (enz_box_side <= 0) fail("enz_box_side must be > 0");
    if (tx_rx_distance <= 0) fail("tx_rx_distance must be > 0");
    double dn = std::sqrt(rx_direction[0] * rx_direction[0] + rx_direction[1] * rx_direction[1] +
                          rx_direction[2] * rx_direction[2]);
    if (!(dn > 0)) fail("rx_direction must be non-zero");
    if (receiver.volume() <= 0) fail("receiver volume must be > 0");

    // Receiver strictly inside the enzyme cube (dimensional check).
    double half = 0.5 * enz_box_side;
    double cd = receiver.center_distance * ref_distance;  // receiver frame is dimensionless
    double reach = receiver.circumradius() * ref_distance;
    for (int axis = 0; axis < 3; ++axis) {
        double c = cd * rx_direction[axis] / dn;
        if (std::fabs(c) + reach >= half) fail("receiver must fit strictly inside the enzyme box");
    }
}

ReferenceSet ReferenceSet::from_params(const SystemParams& p) {
    double v_enz = p.enz_box_side * p.enz_box_side * p.enz_box_side;
    return ReferenceSet{p.tx_rx_distance, p.n_a /* molecule per m^3 */, p.n_e / v_enz, p.n_a};
}

DimensionlessConstants dimensionless_constants(const SystemParams& p, const ReferenceSet& refs) {
    double denom = p.rates.k_minus1 + p.rates.k2;
    if (denom <= 0) throw std::domain_error("gamma_2a undefined: k_minus1 + k2 must be > 0");
    double l2 = refs.distance * refs.distance;
    DimensionlessConstants c{};
    c.gamma_1a = l2 * p.rates.k1 * refs.conc_e_tot / p.species_a.diffusion;
    c.gamma_2a = p.rates.k_minus1 / denom;
    c.gamma_e = l2 * p.rates.k1 * refs.conc_a / p.species_e.diffusion;
    c.gamma_ea = l2 * denom / p.species_ea.diffusion;
    c.gamma_1a_bound = c.gamma_1a;
    return c;
}

bool is_homologous(const DimensionlessConstants& a, const DimensionlessConstants& b,
                   double rel_tol) {
    if (rel_tol <= 0) throw std::invalid_argument("rel_tol must be > 0");
    auto match = [rel_tol](double x, double y) {
        if (x == 0.0 || y == 0.0) return std::fabs(x - y) <= rel_tol;
        return std::fabs(x - y) <= rel_tol * std::max(std::fabs(x), std::fabs(y));
    };
    return match(a.gamma_1a, b.gamma_1a) && match(a.gamma_2a, b.gamma_2a) &&
           match(a.gamma_e, b.gamma_e) && match(a.gamma_ea, b.gamma_ea) &&
           match(a.gamma_1a_bound, b.gamma_1a_bound);
}

namespace {

double diffusion_of(SpeciesTag s, const SystemParams& p) {
    switch (s) {
        case SpeciesTag::A: return p.species_a.diffusion;
        case SpeciesTag::E: return p.species_e.diffusion;
        case SpeciesTag::EA: return p.species_ea.diffusion;
    }
    throw std::invalid_argument("bad species tag");
}

// Reference concentration for one species; EA uses the Michaelis-Menten
// maximum k1 C_Etot C0 / (k-1 + k2).
double conc_scale(SpeciesTag s, const ReferenceSet& refs, const SystemParams& p) {
    switch (s) {
        case SpeciesTag::A: return refs.conc_a;
        case SpeciesTag::E:
            if (refs.conc_e_tot <= 0)
                throw std::domain_error("E concentration scale undefined: C_Etot = 0");
            return refs.conc_e_tot;
        case SpeciesTag::EA: {
            double denom = p.rates.k_minus1 + p.rates.k2;
            if (denom <= 0)
                throw std::domain_error("EA concentration scale undefined: k_minus1 + k2 = 0");
            if (refs.conc_e_tot <= 0)
                throw std::domain_error("EA concentration scale undefined: C_Etot = 0");
            return p.rates.k1 * refs.conc_e_tot * refs.conc_a / denom;
        }
    }
    throw std::invalid_argument("bad species tag");
}

}  // namespace

double nondim(Quantity q, SpeciesTag s, double value, const ReferenceSet& refs,
              const SystemParams& p) {
    switch (q) {
        case Quantity::Concentration: return value / conc_scale(s, refs, p);
        case Quantity::Time:
            return value * diffusion_of(s, p) / (refs.distance * refs.distance);
        case Quantity::Coordinate: return value / refs.distance;
        case Quantity::Count: return value / refs.n_ref;
    }
    throw std::invalid_argument("bad quantity");
}

double redim(Quantity q, SpeciesTag s, double value, const ReferenceSet& refs,
             const SystemParams& p) {
    switch (q) {
        case Quantity::Concentration: return value * conc_scale(s, refs, p);
        case Quantity::Time:
            return value * (refs.distance * refs.distance) / diffusion_of(s, p);
        case Quantity::Coordinate: return value * refs.distance;
        case Quantity::Count: return value * refs.n_ref;
    }
    throw std::invalid_argument("bad quantity");
}

}  // namespace mcchan
