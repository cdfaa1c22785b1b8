// jcsim: driven Jaynes-Cummings oscillator toolkit. Subcommands compute
// steady-state observables, regression correlators and spectra, stochastic
// trajectories and ensembles, Wigner functions, and the acceptance suite.

#include <cmath>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "jc/correlators.hpp"
#include "jc/ensemble.hpp"
#include "jc/errors.hpp"
#include "jc/hilbert.hpp"
#include "jc/io.hpp"
#include "jc/liouvillian.hpp"
#include "jc/minimal_model.hpp"
#include "jc/presets.hpp"
#include "jc/trajectories.hpp"
#include "jc/validation.hpp"
#include "jc/wigner.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct CommonFlags {
    std::string config_path, preset_name, out_dir = ".", format = "csv";
    long long seed = -1;
    int n_max = -1;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "key=value config file");
    cmd->add_option("--preset", f.preset_name, "figure preset name");
    cmd->add_option("--out", f.out_dir, "output directory");
    cmd->add_option("--seed", f.seed, "trajectory base seed");
    cmd->add_option("--n-max", f.n_max, "Fock truncation");
    cmd->add_option("--format", f.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
}

jc::Config resolve_config(const CommonFlags& f) {
    jc::Config c;
    if (!f.preset_name.empty()) c = jc::preset(f.preset_name);
    if (!f.config_path.empty()) c.merge(jc::Config::parse_file(f.config_path));
    if (f.seed >= 0) c.kv["unraveling.seed"] = std::to_string(f.seed);
    if (f.n_max >= 0) c.kv["system.n_max"] = std::to_string(f.n_max);
    return c;
}

jc::OutputFormat fmt_of(const CommonFlags& f) {
    return f.format == "json" ? jc::OutputFormat::json : jc::OutputFormat::csv;
}

std::string path_for(const CommonFlags& f, const std::string& stem) {
    return f.out_dir + "/" + stem + (f.format == "json" ? ".json" : ".csv");
}

jc::RVector omega_grid_from(const jc::Config& c, const jc::SystemParams& p) {
    const double lo = c.get_double_or("spectra.omega_min", -2.5 * p.g);
    const double hi = c.get_double_or("spectra.omega_max", 2.5 * p.g);
    const int n = c.get_int_or("spectra.points", 2001);
    return jc::linspace(lo, hi, n);
}

int cmd_steady(const CommonFlags& f) {
    const jc::Config c = resolve_config(f);
    const jc::SystemParams p = jc::system_params_from_config(c);
    const jc::Operator rho = jc::steady_state(jc::build_liouvillian(p));
    const jc::Operator a = jc::annihilation(p.trunc);
    const double n = jc::expectation(jc::Operator(a.adjoint() * a), rho).real();
    const jc::Operator a2 = a * a;
    const double g20 = n > 1e-14
        ? jc::expectation(jc::Operator(a2.adjoint() * a2), rho).real() / (n * n)
        : 0.0;
    const jc::Complex am = jc::expectation(a, rho);
    jc::RVector vals(4);
    vals << n, g20, am.real(), am.imag();
    jc::RVector row = jc::RVector::Zero(1);
    std::vector<jc::RVector> cols;
    for (int k = 0; k < 4; ++k) {
        row(0) = vals(k);
        cols.push_back(row);
    }
    if (fmt_of(f) == jc::OutputFormat::csv)
        jc::write_series_csv(path_for(f, "steady"), jc::provenance_for(p),
                             {"n_ss", "g2_0", "re_a", "im_a"}, cols);
    else
        jc::write_series_json(path_for(f, "steady"), jc::provenance_for(p),
                              {"n_ss", "g2_0", "re_a", "im_a"}, cols);
    std::printf("n_ss=%s g2(0)=%s\n", jc::format_sig(n).c_str(), jc::format_sig(g20).c_str());
    return 0;
}

int cmd_g2(const CommonFlags& f) {
    const jc::Config c = resolve_config(f);
    const jc::SystemParams p = jc::system_params_from_config(c);
    jc::OperatingPoint op = jc::OperatingPoint::prepare(p);
    const double tau_max = c.get_double_or("g2.tau_max", 10.0);
    const jc::CorrelatorSeries s = jc::g2(op, jc::default_tau_grid(p, tau_max));
    jc::write_correlator(path_for(f, "g2"), fmt_of(f), jc::provenance_for(p), s);
    return 0;
}

int cmd_waiting_time(const CommonFlags& f) {
    const jc::Config c = resolve_config(f);
    const jc::SystemParams p = jc::system_params_from_config(c);
    const double tau_max = c.get_double_or("waiting_time.tau_max", 4.0);
    const jc::RVector tau = jc::default_tau_grid(p, tau_max);

    jc::OperatingPoint op = jc::OperatingPoint::prepare(p);
    const jc::CorrelatorSeries num = jc::waiting_time(op, tau);
    jc::write_correlator(path_for(f, "waiting_time_numeric"), fmt_of(f),
                         jc::provenance_for(p), num);

    if (p.gamma == 0.0) {
        const jc::MinimalModelParams mm = jc::derive_params(p);
        const jc::CorrelatorSeries ana = jc::waiting_time_analytic(mm, tau);
        jc::write_correlator(path_for(f, "waiting_time_analytic"), fmt_of(f),
                             jc::provenance_for(p), ana);
    }
    return 0;
}

int cmd_spectra(const CommonFlags& f) {
    const jc::Config c = resolve_config(f);
    const jc::SystemParams p = jc::system_params_from_config(c);
    const double theta = c.get_double_or("unraveling.theta", kPi / 4.0);
    const jc::RVector omega = omega_grid_from(c, p);

    jc::OperatingPoint op = jc::OperatingPoint::prepare(p);
    jc::write_spectrum(path_for(f, "squeezing"), fmt_of(f), jc::provenance_for(p),
                       jc::squeezing_spectrum(op, theta, omega));
    jc::write_spectrum(path_for(f, "transmission"), fmt_of(f), jc::provenance_for(p),
                       jc::transmission_spectrum(op, omega));

    if (p.gamma == 0.0) {
        const jc::MinimalModelParams mm = jc::derive_params(p);
        jc::write_spectrum(path_for(f, "squeezing_analytic"), fmt_of(f),
                           jc::provenance_for(p),
                           jc::squeezing_spectrum_analytic(mm, theta,
                                                           jc::DecayChannel::gamma0, omega));
        jc::write_spectrum(path_for(f, "transmission_analytic"), fmt_of(f),
                           jc::provenance_for(p),
                           jc::transmission_spectrum_analytic(mm, jc::DecayChannel::gamma0,
                                                              omega));
    }
    return 0;
}

int cmd_trajectory(const CommonFlags& f) {
    const jc::Config c = resolve_config(f);
    const jc::SystemParams p = jc::system_params_from_config(c);
    const jc::UnravelingConfig u = jc::unraveling_from_config(c);
    const jc::TrajectoryRecord rec = u.r >= 1.0 ? jc::run_direct_photodetection(p, u)
                                                : jc::run_wave_particle(p, u);
    jc::write_trajectory(path_for(f, "trajectory"), fmt_of(f), jc::provenance_for(p), rec);
    jc::write_jump_log(f.out_dir + "/jumps.csv", rec);
    std::printf("%zu jumps, final <n>=%s\n", rec.jumps.size(),
                jc::format_sig(rec.cond_photon_number(rec.cond_photon_number.size() - 1))
                    .c_str());
    return 0;
}

int cmd_ensemble(const CommonFlags& f) {
    const jc::Config c = resolve_config(f);
    const jc::SystemParams p = jc::system_params_from_config(c);
    const jc::UnravelingConfig u = jc::unraveling_from_config(c);
    const jc::EnsembleSpec spec = jc::ensemble_from_config(c, u);
    const auto records = jc::run_ensemble(p, spec);

    if (u.r < 1.0) {
        const double tau_max = c.get_double_or("ensemble.tau_max", 3.0);
        const int n_tau = c.get_int_or("ensemble.tau_points", 301);
        const jc::RVector tau = jc::linspace(-tau_max, tau_max, n_tau);
        const jc::TriggeredAverage ta =
            jc::triggered_average(records, tau, spec.warmup, u.bandwidth_B);
        jc::write_triggered_average(path_for(f, "triggered_average"), fmt_of(f),
                                    jc::provenance_for(p), ta);
        std::printf("%d triggers, shot-noise floor %s\n", ta.n_triggers,
                    jc::format_sig(ta.shot_noise_floor).c_str());
    } else {
        std::vector<int> idx;
        for (Eigen::Index i = 0; i < records[0].times.size(); ++i)
            idx.push_back(static_cast<int>(i));
        const jc::EnsembleMoments m = jc::ensemble_photon_moments(records, idx);
        jc::write_series_csv(path_for(f, "ensemble_mean"), jc::provenance_for(p),
                             {"t", "mean_n", "std_error"},
                             {records[0].times, m.mean, m.std_error});
    }
    return 0;
}

int cmd_wigner(const CommonFlags& f) {
    const jc::Config c = resolve_config(f);
    const jc::SystemParams p = jc::system_params_from_config(c);
    const jc::Operator rho = jc::steady_state(jc::build_liouvillian(p));
    const jc::Operator rho_cav = jc::partial_trace_atom(rho);
    // Largest extent the truncation-accuracy guard allows by default, with a
    // small margin so the corner check does not fail on rounding.
    const double amax = std::sqrt(4.0 + p.trunc.n_max) - 2.0;
    const double he = c.get_double_or("wigner.half_extent", 0.99 * amax / std::sqrt(2.0));
    const int pts = c.get_int_or("wigner.points", 101);
    const jc::WignerGrid w = jc::wigner_transform(rho_cav, he, pts);
    jc::write_wigner(path_for(f, "wigner"), fmt_of(f), jc::provenance_for(p), w);
    std::printf("wigner mass %s on [%s]^2\n",
                jc::format_sig(jc::wigner_total_mass(w)).c_str(),
                jc::format_sig(he).c_str());
    return 0;
}

int cmd_validate(int criterion) {
    bool all_pass = true;
    if (criterion > 0) {
        all_pass = jc::run_criterion(criterion).pass;
    } else {
        for (const auto& r : jc::run_all_criteria()) all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"driven Jaynes-Cummings oscillator simulator"};
    app.require_subcommand(1);

    CommonFlags flags[8];
    auto* steady = app.add_subcommand("steady", "steady-state observables");
    add_common(steady, flags[0]);
    auto* g2c = app.add_subcommand("g2", "intensity correlation g2(tau)");
    add_common(g2c, flags[1]);
    auto* wt = app.add_subcommand("waiting-time", "waiting-time distribution");
    add_common(wt, flags[2]);
    auto* sp = app.add_subcommand("spectra", "squeezing and transmission spectra");
    add_common(sp, flags[3]);
    auto* tj = app.add_subcommand("trajectory", "single stochastic trajectory");
    add_common(tj, flags[4]);
    auto* en = app.add_subcommand("ensemble", "trajectory ensemble statistics");
    add_common(en, flags[5]);
    auto* wg = app.add_subcommand("wigner", "steady-state Wigner function");
    add_common(wg, flags[6]);
    auto* va = app.add_subcommand("validate", "run the acceptance suite");
    add_common(va, flags[7]);
    int criterion = 0;
    va->add_option("--criterion", criterion, "single criterion id (1-11)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (steady->parsed()) return cmd_steady(flags[0]);
        if (g2c->parsed()) return cmd_g2(flags[1]);
        if (wt->parsed()) return cmd_waiting_time(flags[2]);
        if (sp->parsed()) return cmd_spectra(flags[3]);
        if (tj->parsed()) return cmd_trajectory(flags[4]);
        if (en->parsed()) return cmd_ensemble(flags[5]);
        if (wg->parsed()) return cmd_wigner(flags[6]);
        if (va->parsed()) return cmd_validate(criterion);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
