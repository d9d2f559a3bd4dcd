// spectra.hpp — Ground-state extraction with degeneracy diagnostics and
// cutoff-convergence certification.

#pragma once

#include "alphagauge/gauge_hamiltonian.hpp"

#include <functional>

namespace alphagauge {

struct CutoffPoint {
    int photon_cutoff = 0;
    int dipole_levels = 0;
    double energy = 0.0;
};

struct GroundStateResult {
    double energy = 0.0;
    Vector state;                 // unit norm, largest-|component| made real positive
    double gap = 0.0;             // E_1 - E_G
    bool converged = true;
    bool degeneracy_warning = false;   // gap < 1e-8 * max(1, |E_G|)
    double residual = 0.0;             // ||H s - E s||_max / ||H||_max
    std::vector<CutoffPoint> cutoff_trace;
};

struct CutoffLimits {
    int photon_start = 10;
    int level_start = 2;
    int photon_step = 10;
    int level_step = 2;
    int photon_max = 200;
    int level_max = 16;
};

// Ceiling reached before the stopping rule was met; carries the trace.
class CutoffCeilingError : public ConvergenceError {
public:
    CutoffCeilingError(const std::string& what, std::vector<CutoffPoint> trace,
                       std::string diagnostics)
        : ConvergenceError(what, std::move(diagnostics)), trace(std::move(trace)) {}
    std::vector<CutoffPoint> trace;
};

GroundStateResult ground_state(const HermitianOperator& h);

using HamiltonianBuilder = std::function<HermitianOperator(int photon_cutoff, int dipole_levels)>;

// Alternates photon and level increments until one increment in each
// direction, taken consecutively, changes E_G by less than tol*|E_G|.
GroundStateResult converge_cutoffs(const HamiltonianBuilder& builder, double tol,
                                   const CutoffLimits& limits = {});

// Converged E_G(eta) - E_G(0); throws CutoffCeilingError if either end fails.
double energy_shift(const DipoleModel& model, const ModelConfig& cfg_at_eta,
                    const ModelConfig& cfg_at_zero, double tol = 1e-8,
                    const CutoffLimits& limits = {});

} // namespace alphagauge
