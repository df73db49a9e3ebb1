#include "mcchan/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mcchan/harness.hpp"

namespace mcchan {
namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct KeyValue {
    std::string value;
    int line;
};

std::map<std::string, KeyValue> tokenize(const std::string& text) {
    std::map<std::string, KeyValue> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected key = value, got '" + t + "'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": empty key or value");
        if (kv.count(key))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate key '" +
                                        key + "'");
        kv[key] = {value, lineno};
    }
    return kv;
}

double parse_double(const std::string& key, const KeyValue& kv) {
    try {
        std::size_t pos = 0;
        double v = std::stod(kv.value, &pos);
        if (pos != kv.value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("line " + std::to_string(kv.line) + ": key '" + key +
                                    "': not a number: '" + kv.value + "'");
    }
}

bool parse_bool(const std::string& key, const KeyValue& kv) {
    if (kv.value == "true" || kv.value == "1") return true;
    if (kv.value == "false" || kv.value == "0") return false;
    throw std::invalid_argument("line " + std::to_string(kv.line) + ": key '" + key +
                                "': expected true/false");
}

std::array<double, 3> parse_vec3(const std::string& key, const KeyValue& kv) {
    std::array<double, 3> v{};
    std::istringstream in(kv.value);
    std::string part;
    int i = 0;
    while (std::getline(in, part, ',')) {
        if (i >= 3) break;
        try {
            v[i] = std::stod(trim(part));
        } catch (...) {
            i = 99;
            break;
        }
        ++i;
    }
    if (i != 3)
        throw std::invalid_argument("line " + std::to_string(kv.line) + ": key '" + key +
                                    "': expected three comma-separated numbers");
    return v;
}

void require_positive(const std::string& key, double v) {
    if (!(v > 0)) throw std::invalid_argument("key '" + key + "': must be > 0");
}

void require_non_negative(const std::string& key, double v) {
    if (!(v >= 0)) throw std::invalid_argument("key '" + key + "': must be >= 0");
}

constexpr const char* kRequiredKeys[] = {
    "temperature_K", "viscosity_kg_per_m_s", "radius_A_nm", "radius_E_nm", "radius_EA_nm",
    "k1_m3_per_molecule_s", "kminus1_per_s", "k2_per_s", "n_A", "n_E", "enz_box_side_nm",
    "tx_rx_distance_nm", "receiver_shape", "dt_us", "seed", "n_trials", "t_star_min",
    "t_star_max", "t_star_points"};

constexpr const char* kOptionalKeys[] = {
    "diff_A_m2_per_s", "diff_E_m2_per_s", "diff_EA_m2_per_s", "tx_rx_direction",
    "receiver_radius_star", "receiver_x_i_star", "receiver_x_f_star", "receiver_y_i_star",
    "receiver_y_f_star", "receiver_z_i_star", "receiver_z_f_star", "ref_distance_nm",
    "ref_conc_A_per_m3", "unbind_colocated"};

}  // namespace

RunConfig parse_config(const std::string& text) {
    auto kv = tokenize(text);

    for (const auto& [key, _] : kv) {
        bool known = std::find_if(std::begin(kRequiredKeys), std::end(kRequiredKeys),
                                  [&](const char* k) { return key == k; }) != std::end(kRequiredKeys) ||
                     std::find_if(std::begin(kOptionalKeys), std::end(kOptionalKeys),
                                  [&](const char* k) { return key == k; }) != std::end(kOptionalKeys);
        if (!known)
            throw std::invalid_argument("line " + std::to_string(kv.at(key).line) +
                                        ": unknown key '" + key + "'");
    }
    std::vector<std::string> missing;
    for (const char* k : kRequiredKeys)
        if (!kv.count(k)) missing.push_back(k);
    if (!missing.empty()) {
        std::string msg = "missing required keys:";
        for (const auto& k : missing) msg += " " + k;
        throw std::invalid_argument(msg);
    }

    auto num = [&](const char* key) { return parse_double(key, kv.at(key)); };

    RunConfig c;
    c.temperature_k = num("temperature_K");
    c.viscosity = num("viscosity_kg_per_m_s");
    c.radius_a = num("radius_A_nm") * 1e-9;
    c.radius_e = num("radius_E_nm") * 1e-9;
    c.radius_ea = num("radius_EA_nm") * 1e-9;
    c.k1 = num("k1_m3_per_molecule_s");
    c.k_minus1 = num("kminus1_per_s");
    c.k2 = num("k2_per_s");
    c.n_a = num("n_A");
    c.n_e = num("n_E");
    c.enz_box_side = num("enz_box_side_nm") * 1e-9;
    c.tx_rx_distance = num("tx_rx_distance_nm") * 1e-9;
    c.dt = num("dt_us") * 1e-6;
    c.seed = static_cast<std::uint64_t>(num("seed"));
    c.n_trials = static_cast<int>(num("n_trials"));
    c.t_star_min = num("t_star_min");
    c.t_star_max = num("t_star_max");
    c.t_star_points = static_cast<int>(num("t_star_points"));

    if (kv.count("diff_A_m2_per_s")) c.diff_a = num("diff_A_m2_per_s");
    if (kv.count("diff_E_m2_per_s")) c.diff_e = num("diff_E_m2_per_s");
    if (kv.count("diff_EA_m2_per_s")) c.diff_ea = num("diff_EA_m2_per_s");
    if (kv.count("tx_rx_direction"))
        c.tx_rx_direction = parse_vec3("tx_rx_direction", kv.at("tx_rx_direction"));
    if (kv.count("ref_distance_nm")) c.ref_distance = num("ref_distance_nm") * 1e-9;
    if (kv.count("ref_conc_A_per_m3")) c.ref_conc_a = num("ref_conc_A_per_m3");
    if (kv.count("unbind_colocated"))
        c.unbind_colocated = parse_bool("unbind_colocated", kv.at("unbind_colocated"));

    const std::string shape = kv.at("receiver_shape").value;
    if (shape == "sphere") {
        c.receiver_is_sphere = true;
        if (!kv.count("receiver_radius_star"))
            throw std::invalid_argument("missing required keys: receiver_radius_star");
        c.receiver_radius_star = num("receiver_radius_star");
    } else if (shape == "box") {
        c.receiver_is_sphere = false;
        const char* box_keys[] = {"receiver_x_i_star", "receiver_x_f_star", "receiver_y_i_star",
                                  "receiver_y_f_star", "receiver_z_i_star", "receiver_z_f_star"};
        for (int i = 0; i < 6; ++i) {
            if (!kv.count(box_keys[i]))
                throw std::invalid_argument(std::string("missing required keys: ") + box_keys[i]);
            c.receiver_box_star[i] = num(box_keys[i]);
        }
    } else {
        throw std::invalid_argument("key 'receiver_shape': expected sphere or box");
    }

    // eager invariant checks, named after the offending key
    require_positive("temperature_K", c.temperature_k);
    require_positive("viscosity_kg_per_m_s", c.viscosity);
    require_positive("radius_A_nm", c.radius_a);
    require_positive("radius_E_nm", c.radius_e);
    require_positive("radius_EA_nm", c.radius_ea);
    require_non_negative("k1_m3_per_molecule_s", c.k1);
    require_non_negative("kminus1_per_s", c.k_minus1);
    require_non_negative("k2_per_s", c.k2);
    if (!(c.n_a >= 1)) throw std::invalid_argument("key 'n_A': must be >= 1");
    require_non_negative("n_E", c.n_e);
    require_positive("enz_box_side_nm", c.enz_box_side);
    require_positive("tx_rx_distance_nm", c.tx_rx_distance);
    require_positive("dt_us", c.dt);
    if (c.n_trials < 1) throw std::invalid_argument("key 'n_trials': must be >= 1");
    require_positive("t_star_min", c.t_star_min);
    if (!(c.t_star_max > c.t_star_min))
        throw std::invalid_argument("key 't_star_max': must be > t_star_min");
    if (c.t_star_points < 2) throw std::invalid_argument("key 't_star_points': must be >= 2");
    if (c.receiver_is_sphere) require_positive("receiver_radius_star", c.receiver_radius_star);

    // full cross-field validation (receiver inside box, binding radius, ...)
    c.to_sim_config().validate();
    return c;
}

SystemParams RunConfig::to_system_params() const {
    SystemParams p;
    p.medium = {temperature_k, viscosity};
    p.species_a = {radius_a, diff_a > 0 ? diff_a : stokes_einstein(p.medium, radius_a)};
    p.species_e = {radius_e, diff_e > 0 ? diff_e : stokes_einstein(p.medium, radius_e)};
    p.species_ea = {radius_ea, diff_ea > 0 ? diff_ea : stokes_einstein(p.medium, radius_ea)};
    p.rates = {k1, k_minus1, k2};
    p.n_a = n_a;
    p.n_e = n_e;
    p.enz_box_side = enz_box_side;
    p.tx_rx_distance = tx_rx_distance;
    p.rx_direction = tx_rx_direction;
    double l = ref_distance > 0 ? ref_distance : tx_rx_distance;
    if (receiver_is_sphere) {
        p.receiver = ReceiverGeometry::sphere(tx_rx_distance / l, receiver_radius_star);
    } else {
        const auto& b = receiver_box_star;
        p.receiver = ReceiverGeometry::box(b[0], b[1], b[2], b[3], b[4], b[5]);
    }
    return p;
}

ReferenceSet RunConfig::to_reference_set() const {
    double v_enz = enz_box_side * enz_box_side * enz_box_side;
    return ReferenceSet{ref_distance > 0 ? ref_distance : tx_rx_distance,
                        ref_conc_a > 0 ? ref_conc_a : n_a, n_e / v_enz, n_a};
}

SimConfig RunConfig::to_sim_config() const {
    SimConfig cfg;
    cfg.params = to_system_params();
    cfg.refs = to_reference_set();
    cfg.dt = dt;
    cfg.seed = seed;
    cfg.unbind_colocated = unbind_colocated;
    for (double t_star : log_spaced(t_star_min, t_star_max, t_star_points))
        cfg.sample_times.push_back(redim(Quantity::Time, SpeciesTag::A, t_star, cfg.refs, cfg.params));
    return cfg;
}

RunConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

std::uint64_t config_hash(const std::string& text) {
    auto kv = tokenize(text);
    std::uint64_t h = 0xCBF29CE484222325ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001B3ull;
        }
    };
    for (const auto& [key, val] : kv) {  // std::map iterates sorted
        mix(key);
        mix("=");
        mix(val.value);
        mix("\n");
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace mcchan
