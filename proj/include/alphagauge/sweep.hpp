// sweep.hpp — Configuration-driven (η, α) sweeps: convergence, observables,
// CSV emission, and convergence reports.

#pragma once

#include "alphagauge/spectra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace alphagauge {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SweepTolerances {
    double energy = 1e-8;
    double entanglement = 1e-6;
};

struct SweepConfig {
    DoubleWellParams model;
    int levels = 0;              // dipole level budget; 0 -> 16 (one dipole) / 8 (two)
    bool resonance = true;
    double omega = 0.0;          // used when resonance is false
    int n_dipoles = 1;
    std::vector<double> eta_grid;     // default 0:0.05:1.5
    std::vector<double> alpha_grid;   // default 0:0.05:1
    std::vector<std::string> observables;
    SweepTolerances tolerances;
    CutoffLimits cutoffs;        // photon/level ceilings; defaults by n_dipoles
    int workers = 1;
    std::string csv_path;        // output.csv (sweep verb)
    std::string report_path;     // output.report (converge verb; empty -> stdout)
};

// Strict parse: unknown keys anywhere are rejected.
SweepConfig parse_sweep_config(const std::string& json_text);
SweepConfig load_sweep_config(const std::string& path);

// FNV-1a over the canonical re-serialized config.
std::string config_hash(const SweepConfig& config);

struct SweepRecord {
    double eta = 0.0;
    double alpha = 0.0;
    bool converged = false;
    double energy = 0.0;
    double gap = 0.0;
    int photon_final = 0;
    int level_final = 0;
    bool degeneracy_warning = false;
    std::vector<CutoffPoint> trace;
    // column name -> value; NaN renders as a blank CSV field
    std::map<std::string, double> observables;
};

struct SweepResult {
    SweepConfig config;
    double omega = 0.0;      // resolved mode frequency
    double omega_m = 0.0;
    std::vector<std::string> observable_columns;
    std::vector<SweepRecord> records;
};

SweepResult run_sweep(const SweepConfig& config);

std::string csv_to_string(const SweepResult& result);
void write_csv(const SweepResult& result, const std::string& path);

struct CsvTable {
    std::vector<std::string> comments;   // '#' lines, verbatim without the marker
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;

    int column_index(const std::string& name) const;   // -1 if absent
};

CsvTable parse_csv_string(const std::string& text);
CsvTable parse_csv_file(const std::string& path);

// Rebuild records from a parsed sweep CSV (traces are not persisted in CSV).
std::vector<SweepRecord> records_from_csv(const CsvTable& table);

// Per-point cutoff traces, gaps, and degeneracy warnings.
std::string convergence_report(const SweepResult& result);

// Fixed CSV float format: 12 significant digits, scientific.
std::string format_csv_double(double v);

} // namespace alphagauge
