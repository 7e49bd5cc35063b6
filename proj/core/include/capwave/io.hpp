#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capwave/energy.hpp"
#include "capwave/evolution.hpp"
#include "capwave/field.hpp"

namespace capwave {

enum class ExperimentKind { Conserve, Decay, Scatter, Drift, DnValidate, Symbols };

struct InitialDataSpec {
    std::string kind = "packet";    // "packet" or "cosine"
    double center_frequency = 1.0;
    double envelope_width = 40.0;
    double amplitude = 0.01;
    unsigned seed = 1;
};

struct ScenarioConfig {
    double box_length = 2.0 * 3.14159265358979323846;
    std::size_t mode_count = 256;
    InitialDataSpec initial;
    IntegratorConfig integrator;
    std::vector<double> snapshot_schedule;  // strictly increasing
    double dyadic_t0 = 0.0;                 // when > 0, t_m = dyadic_t0 * 2^m added
    ExperimentKind experiment = ExperimentKind::Conserve;
    std::string output_dir = "run";
    // experiment extras
    std::vector<double> eps_list;  // drift / dn_validate amplitude scans
    int energy_order = 2;          // k for the drift experiment
    double norm_N = 3.0, norm_b = 0.0, norm_N2 = 5.0;

    double wraparound_time() const;  // L / (3 sqrt(xi_max))
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    std::string detail;
};

struct RunManifest {
    std::string config_hash;
    std::string code_version;
    std::string started;
    std::string finished;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// Config file handling (JSON; unknown keys are errors).
ScenarioConfig load_config(const std::string& path);
std::string hash_config_file(const std::string& path);
void validate_config(const ScenarioConfig& cfg);

// Gaussian-envelope wave-packet (or plain cosine) initial data.
WaveState make_initial_state(const FrequencyLattice& lat, const InitialDataSpec& spec);

// Experiment drivers; each writes tables under out_dir (when non-empty)
// and returns its manifest checks.
std::vector<CheckResult> experiment_conserve(const ScenarioConfig& cfg, const std::string& out_dir);
std::vector<CheckResult> experiment_decay(const ScenarioConfig& cfg, const std::string& out_dir);
std::vector<CheckResult> experiment_scatter(const ScenarioConfig& cfg, const std::string& out_dir);
std::vector<CheckResult> experiment_drift(const ScenarioConfig& cfg, const std::string& out_dir);
std::vector<CheckResult> experiment_dn_validate(const ScenarioConfig& cfg,
                                                const std::string& out_dir);
std::vector<CheckResult> experiment_symbols(const ScenarioConfig& cfg, const std::string& out_dir);

// Full scenario: dispatch, persistence, manifest.
RunManifest run_scenario(const std::string& config_path);

// Plot-data emission for a completed run directory (CSV + JSON index).
// Returns the emitted file names; missing inputs produce a warning entry.
std::vector<std::string> emit_plotdata(const std::string& run_dir);

// Snapshot persistence: little-endian binary coefficients + JSON sidecar.
void write_snapshot(const std::string& dir, const std::string& name, const SpectralField& f,
                    double t);
SpectralField read_snapshot(const std::string& dir, const std::string& name, double* t_out);

std::string code_version();

}  // namespace capwave
