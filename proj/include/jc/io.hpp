#pragma once

// Config parsing (flat key=value with section prefixes) and series output:
// CSV with a provenance header, 12 significant digits, plus JSON sidecars.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jc/correlators.hpp"
#include "jc/ensemble.hpp"
#include "jc/trajectories.hpp"
#include "jc/types.hpp"
#include "jc/wigner.hpp"

namespace jc {

enum class OutputFormat { csv, json };

struct Config {
    std::map<std::string, std::string> kv;

    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text);
    void merge(const Config& overrides);   // overrides win

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;               // throws ConfigError naming the key
    std::string get_or(const std::string& key, const std::string& def) const;
    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double def) const;
    int get_int_or(const std::string& key, int def) const;
};

SystemParams system_params_from_config(const Config& c);
UnravelingConfig unraveling_from_config(const Config& c);
EnsembleSpec ensemble_from_config(const Config& c, const UnravelingConfig& u);

// "key=value" provenance lines, '#'-prefixed in CSV.
using Provenance = std::vector<std::pair<std::string, std::string>>;
Provenance provenance_for(const SystemParams& p);

std::string format_sig(double v);   // 12 significant digits

void write_series_csv(const std::string& path, const Provenance& prov,
                      const std::vector<std::string>& columns,
                      const std::vector<RVector>& data);
void write_series_json(const std::string& path, const Provenance& prov,
                       const std::vector<std::string>& columns,
                       const std::vector<RVector>& data);

void write_correlator(const std::string& path, OutputFormat f, const Provenance& prov,
                      const CorrelatorSeries& s);
void write_spectrum(const std::string& path, OutputFormat f, const Provenance& prov,
                    const SpectrumSeries& s);
void write_trajectory(const std::string& path, OutputFormat f, const Provenance& prov,
                      const TrajectoryRecord& rec);
void write_jump_log(const std::string& path, const TrajectoryRecord& rec);
void write_wigner(const std::string& path, OutputFormat f, const Provenance& prov,
                  const WignerGrid& w);
void write_triggered_average(const std::string& path, OutputFormat f, const Provenance& prov,
                             const TriggeredAverage& ta);

}  // namespace jc
