// gauge_hamiltonian.hpp — Dipole-gauge Hamiltonians for one and two dipoles
// coupled to a single mode, and the α-gauge family obtained by exact unitary
// conjugation.

#pragma once

#include "alphagauge/dipole_model.hpp"
#include "alphagauge/hilbert.hpp"

namespace alphagauge {

struct ModelConfig {
    double omega = 1.0;      // mode frequency
    double eta = 0.0;        // dimensionless coupling
    double alpha = 1.0;      // gauge parameter (any real; 0 = Coulomb, 1 = dipole)
    int photon_cutoff = 10;  // N
    int dipole_levels = 2;   // L
    int n_dipoles = 1;
};

void validate_config(const ModelConfig& cfg);

// Factor labels used by all builders.
extern const char* const kModeLabel;      // "mode"
extern const char* const kDipoleLabel;    // "dipole"
extern const char* const kDipole1Label;   // "dipole1"
extern const char* const kDipole2Label;   // "dipole2"

// H' = Σ ω_n |n><n| ⊗ I + I ⊗ ω(a†a + 1/2) + ω η² ζ̂² ⊗ I + i ω η ζ̂ ⊗ (a† - a)
// on (dipole L, mode N).
HermitianOperator build_dipole_gauge_one(const DipoleModel& model, const ModelConfig& cfg);

// Two identical dipoles on (dipole1 L, dipole2 L, mode N); one V' per dipole
// and no direct dipole-dipole term in this gauge.
HermitianOperator build_dipole_gauge_two(const DipoleModel& model, const ModelConfig& cfg);

// Dispatch on cfg.n_dipoles.
HermitianOperator build_dipole_gauge(const DipoleModel& model, const ModelConfig& cfg);

// R_{αα'} = exp(i (α - α') η Σ_i ζ̂_i ⊗ (a + a†)).
UnitaryOperator gauge_unitary(const DipoleModel& model, const ModelConfig& cfg,
                              double alpha_from, double alpha_to);

// H_α = R_{1α} H' R_{1α}†. Identical to conjugate(build_dipole_gauge(...),
// gauge_unitary(..., 1, α)); computed with the factorized eigenbasis of the
// generator so large cutoffs stay affordable.
HermitianOperator build_alpha_gauge(const DipoleModel& model, const ModelConfig& cfg);

// Coefficient of ζ̂₁ ⊗ ζ̂₂ ⊗ I_ph inside a two-dipole H_α, read off by a trace
// inner product against ζ̂₁ ⊗ ζ̂₂ on the photon-vacuum block. Equals
// -2 ω η² (1 - α²).
double direct_interaction_coefficient(const HermitianOperator& h_alpha,
                                      const DipoleModel& model, const ModelConfig& cfg);

// α_JC = ω_m / (ω + ω_m).
double jc_gauge(double omega, double omega_m);

// Project H_α onto the lowest two bare levels of each dipole (full mode space
// kept). Applied after gauge fixing, per gauge.
HermitianOperator truncate_two_level(const HermitianOperator& h_alpha, const ModelConfig& cfg);

} // namespace alphagauge
