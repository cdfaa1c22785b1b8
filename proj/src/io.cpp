#include "jc/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "jc/errors.hpp"
#include "json.hpp"

namespace jc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse_text(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        c.kv[key] = val;
    }
    return c;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_text(buf.str());
}

void Config::merge(const Config& overrides) {
    for (const auto& [k, v] : overrides.kv) kv[k] = v;
}

bool Config::has(const std::string& key) const { return kv.count(key) > 0; }

std::string Config::get(const std::string& key) const {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError("missing config key '" + key + "'");
    return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& def) const {
    const auto it = kv.find(key);
    return it == kv.end() ? def : it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string v = get(key);
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing junk");
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse '" + v + "' as a number");
    }
}

double Config::get_double_or(const std::string& key, double def) const {
    return has(key) ? get_double(key) : def;
}

int Config::get_int_or(const std::string& key, int def) const {
    if (!has(key)) return def;
    const double x = get_double(key);
    const int i = static_cast<int>(std::llround(x));
    if (std::abs(x - i) > 1e-9)
        throw ConfigError("config key '" + key + "': expected an integer");
    return i;
}

SystemParams system_params_from_config(const Config& c) {
    const double g = c.get_double("system.g");
    const double kappa = c.get_double_or("system.kappa", 1.0);
    const double gamma = c.get_double_or("system.gamma", 0.0);
    const double eps_d = c.get_double("system.eps_d");
    const int n_max = c.get_int_or("system.n_max", 14);
    double dw;
    if (c.has("system.delta_omega_d")) {
        dw = c.get_double("system.delta_omega_d");
    } else {
        dw = SystemParams::two_photon_resonance_detuning(g, eps_d);
    }
    SystemParams p;
    p.g = g;
    p.kappa = kappa;
    p.gamma = gamma;
    p.eps_d = eps_d;
    p.delta_omega_d = dw;
    p.trunc.n_max = n_max;
    if (g <= 0.0 || kappa <= 0.0 || n_max < 1)
        throw ConfigError("system parameters: need g > 0, kappa > 0, n_max >= 1");
    return p;
}

UnravelingConfig unraveling_from_config(const Config& c) {
    UnravelingConfig u;
    u.r = c.get_double_or("unraveling.r", 1.0);
    u.theta = c.get_double_or("unraveling.theta", 0.0);
    u.bandwidth_B = c.get_double_or("unraveling.bandwidth_B", 10.0);
    u.dt = c.get_double_or("unraveling.dt", 0.0);
    u.seed = static_cast<std::uint64_t>(c.get_double_or("unraveling.seed", 1.0));
    u.t_max = c.get_double_or("unraveling.t_max", 10.0);
    u.record_stride = c.get_int_or("unraveling.record_stride", 1);
    u.initial_state.spec = c.get_or("unraveling.initial_state", "fock:0");
    if (u.r < 0.0 || u.r > 1.0)
        throw ConfigError("unraveling.r: must lie in [0, 1]");
    return u;
}

EnsembleSpec ensemble_from_config(const Config& c, const UnravelingConfig& u) {
    EnsembleSpec e;
    e.cfg = u;
    e.n_traj = c.get_int_or("ensemble.n_traj", 100);
    e.base_seed = static_cast<std::uint64_t>(c.get_double_or("ensemble.base_seed", 1.0));
    e.warmup = c.get_double_or("ensemble.warmup", 0.0);
    if (e.n_traj < 1) throw ConfigError("ensemble.n_traj: must be >= 1");
    return e;
}

Provenance provenance_for(const SystemParams& p) {
    return {
        {"system.g", format_sig(p.g)},
        {"system.kappa", format_sig(p.kappa)},
        {"system.gamma", format_sig(p.gamma)},
        {"system.eps_d", format_sig(p.eps_d)},
        {"system.delta_omega_d", format_sig(p.delta_omega_d)},
        {"system.n_max", std::to_string(p.trunc.n_max)},
    };
}

std::string format_sig(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

namespace {

void check_columns(const std::vector<std::string>& columns, const std::vector<RVector>& data) {
    if (columns.size() != data.size())
        throw DimensionMismatch("series writer: column/data count mismatch");
    for (const auto& col : data)
        if (col.size() != data.front().size())
            throw DimensionMismatch("series writer: ragged columns");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open output file '" + path + "'");
    return f;
}

}  // namespace

void write_series_csv(const std::string& path, const Provenance& prov,
                      const std::vector<std::string>& columns,
                      const std::vector<RVector>& data) {
    check_columns(columns, data);
    auto f = open_out(path);
    for (const auto& [k, v] : prov) f << "# " << k << "=" << v << "\n";
    for (std::size_t c = 0; c < columns.size(); ++c)
        f << columns[c] << (c + 1 < columns.size() ? "," : "\n");
    for (Eigen::Index r = 0; r < data.front().size(); ++r)
        for (std::size_t c = 0; c < columns.size(); ++c)
            f << format_sig(data[c](r)) << (c + 1 < columns.size() ? "," : "\n");
}

void write_series_json(const std::string& path, const Provenance& prov,
                       const std::vector<std::string>& columns,
                       const std::vector<RVector>& data) {
    check_columns(columns, data);
    nlohmann::json j;
    for (const auto& [k, v] : prov) j["provenance"][k] = v;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        std::vector<double> col(data[c].data(), data[c].data() + data[c].size());
        j["columns"][columns[c]] = col;
    }
    auto f = open_out(path);
    f << j.dump(2) << "\n";
}

namespace {

void write_series(const std::string& path, OutputFormat fmt, const Provenance& prov,
                  const std::vector<std::string>& columns, const std::vector<RVector>& data) {
    if (fmt == OutputFormat::csv)
        write_series_csv(path, prov, columns, data);
    else
        write_series_json(path, prov, columns, data);
}

std::string correlator_name(CorrelatorKind k) {
    switch (k) {
        case CorrelatorKind::g2: return "g2";
        case CorrelatorKind::waiting_time: return "waiting_time";
        case CorrelatorKind::first_order: return "first_order";
        case CorrelatorKind::anomalous: return "anomalous";
        case CorrelatorKind::h_theta: return "h_theta";
    }
    return "unknown";
}

}  // namespace

void write_correlator(const std::string& path, OutputFormat fmt, const Provenance& prov,
                      const CorrelatorSeries& s) {
    Provenance p = prov;
    p.push_back({"series.kind", correlator_name(s.kind)});
    p.push_back({"series.method", s.method});
    if (s.kind == CorrelatorKind::h_theta && s.theta)
        p.push_back({"series.theta", format_sig(*s.theta)});
    if (s.integral) p.push_back({"series.integral", format_sig(*s.integral)});
    write_series(path, fmt, p, {"tau", "re", "im"},
                 {s.tau, s.values.real(), s.values.imag()});
}

void write_spectrum(const std::string& path, OutputFormat fmt, const Provenance& prov,
                    const SpectrumSeries& s) {
    Provenance p = prov;
    p.push_back({"series.kind", s.kind == SpectrumKind::squeezing ? "squeezing" : "transmission"});
    p.push_back({"series.method", s.method});
    if (s.kind == SpectrumKind::squeezing && s.theta)
        p.push_back({"series.theta", format_sig(*s.theta)});
    std::vector<std::string> cols{"omega", "value"};
    std::vector<RVector> data{s.omega, s.values};
    write_series(path, fmt, p, cols, data);
}

void write_trajectory(const std::string& path, OutputFormat fmt, const Provenance& prov,
                      const TrajectoryRecord& rec) {
    Provenance p = prov;
    p.push_back({"trajectory.seed", std::to_string(rec.seed)});
    p.push_back({"trajectory.dt", format_sig(rec.dt)});
    p.push_back({"trajectory.n_jumps", std::to_string(rec.jumps.size())});
    std::vector<std::string> cols{"t", "n_cond", "quad_cond"};
    std::vector<RVector> data{rec.times, rec.cond_photon_number, rec.cond_quadrature};
    if (rec.photocurrent.size() == rec.times.size()) {
        cols.push_back("photocurrent");
        data.push_back(rec.photocurrent);
    }
    write_series(path, fmt, p, cols, data);
}

void write_jump_log(const std::string& path, const TrajectoryRecord& rec) {
    auto f = open_out(path);
    f << "# trajectory.seed=" << rec.seed << "\n";
    f << "time,channel\n";
    for (const Jump& j : rec.jumps)
        f << format_sig(j.time) << ","
          << (j.channel == JumpChannel::cavity_APD ? "cavity_APD" : "spontaneous") << "\n";
}

void write_wigner(const std::string& path, OutputFormat fmt, const Provenance& prov,
                  const WignerGrid& w) {
    Provenance p = prov;
    p.push_back({"wigner.convention", w.convention});
    // Flattened grid: one row per (x, p) point.
    const auto nx = w.x.size(), np = w.p.size();
    RVector xs(nx * np), ps(nx * np), vals(nx * np);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < nx; ++i)
        for (Eigen::Index j = 0; j < np; ++j, ++r) {
            xs(r) = w.x(i);
            ps(r) = w.p(j);
            vals(r) = w.values(i, j);
        }
    write_series(path, fmt, p, {"x", "p", "W"}, {xs, ps, vals});
}

void write_triggered_average(const std::string& path, OutputFormat fmt, const Provenance& prov,
                             const TriggeredAverage& ta) {
    Provenance p = prov;
    p.push_back({"triggered.n_triggers", std::to_string(ta.n_triggers)});
    p.push_back({"triggered.shot_noise_floor", format_sig(ta.shot_noise_floor)});
    write_series(path, fmt, p, {"tau", "H", "std_error"},
                 {ta.tau, ta.H_values, ta.std_error});
}

}  // namespace jc
