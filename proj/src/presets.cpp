#include "jc/presets.hpp"

#include <cstdio>

#include "jc/errors.hpp"

namespace jc {

namespace {

// Operating points quoted in the figure captions, kappa = 1 units.
// Drive strengths follow eps_d = sqrt(Omega g / (2 sqrt(2))) where the
// caption quotes Omega instead of eps_d.
std::string preset_text(const std::string& name) {
    const double pi = 3.14159265358979323846;
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.15g", v);
        return std::string(buf);
    };
    const std::string theta_q = "unraveling.theta=" + num(pi / 4) + "\n";
    const std::string theta_3q = "unraveling.theta=" + num(3 * pi / 4) + "\n";

    if (name == "fig2a")
        return "system.g=1000\nsystem.gamma=2\nsystem.eps_d=50\nsystem.n_max=14\n"
               "unraveling.r=1\nunraveling.initial_state=fock:1\nunraveling.t_max=10\n";
    if (name == "fig2b")
        return "system.g=1000\nsystem.gamma=0\nsystem.eps_d=50\nsystem.n_max=14\n";
    if (name == "fig3")
        return "system.g=1000\nsystem.gamma=2\nsystem.eps_d=50\nsystem.n_max=25\n"
               "unraveling.r=1\nunraveling.initial_state=fock:3\nunraveling.t_max=10\n";
    if (name == "fig4")
        return "system.g=200\nsystem.gamma=0\nsystem.eps_d=11\n"
               "system.delta_omega_d=-142.28\nsystem.n_max=14\n";
    if (name == "fig5a")
        return "system.g=200\nsystem.gamma=0\nsystem.eps_d=6\n"
               "system.delta_omega_d=-142.28\nsystem.n_max=14\n"
               "unraveling.r=0.5\n" + theta_3q +
               "unraveling.initial_state=fock:1\nunraveling.t_max=10\n";
    if (name == "fig5b")
        return "system.g=200\nsystem.gamma=0\nsystem.eps_d=11\n"
               "system.delta_omega_d=-142.28\nsystem.n_max=14\n"
               "unraveling.r=0.5\n" + theta_q +
               "unraveling.initial_state=fock:1\nunraveling.t_max=10\n";
    if (name == "fig5c")
        return "system.g=200\nsystem.gamma=0\nsystem.eps_d=11\n"
               "system.delta_omega_d=-142.28\nsystem.n_max=14\n"
               "unraveling.r=0.5\n" + theta_3q +
               "unraveling.initial_state=fock:1\nunraveling.t_max=10\n";
    if (name == "fig5d")
        return "system.g=200\nsystem.gamma=0\nsystem.eps_d=32\n"
               "system.delta_omega_d=109\nsystem.n_max=14\n"
               "unraveling.r=0.5\n" + theta_q +
               "unraveling.initial_state=fock:1\nunraveling.t_max=10\n";
    if (name == "fig6")
        return "system.g=200\nsystem.gamma=0\nsystem.eps_d=6\n"
               "system.delta_omega_d=-142.28\nsystem.n_max=14\n"
               "unraveling.r=0.5\n" + theta_q +
               "unraveling.initial_state=fock:1\nunraveling.t_max=10\n";
    throw ConfigError("unknown preset '" + name + "'");
}

}  // namespace

Config preset(const std::string& name) { return Config::parse_text(preset_text(name)); }

std::vector<std::string> preset_names() {
    return {"fig2a", "fig2b", "fig3", "fig4", "fig5a", "fig5b", "fig5c", "fig5d", "fig6"};
}

}  // namespace jc
