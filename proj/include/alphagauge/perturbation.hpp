// perturbation.hpp — Closed-form weak-coupling and scattering-theory
// expressions, used as independent oracles and figure overlays.

#pragma once

#include "alphagauge/quantum_info.hpp"

#include <Eigen/Dense>

namespace alphagauge {

struct PerturbativePoint {
    double eta = 0.0;
    double omega = 0.0;
    double omega_m = 0.0;
    double alpha = 0.0;
    double beta = 0.0;        // β_α = η (ω_m/(ω+ω_m) - α)
    double p = 0.0;           // β_α², excited-level population
    double beta_local = 0.0;  // β₁ = -η ω/(ω+ω_m)
    double s_static = 0.0;    // (1-α) η; β_α = β₁ + s_α
};

PerturbativePoint beta_alpha(double eta, double omega, double omega_m, double alpha);

// ρ = diag(1-β², β²) in (g, e) ordering on a two-level dipole factor.
DensityMatrix perturbative_reduced_state(const PerturbativePoint& point);

// Γ = ω_eg³ |d_eg|² / (3π).
double spontaneous_rate(double omega_eg, double d_eg_sq);

// Resonance energy-transfer matrix element between dipoles d1, d2 separated by
// R along unit vector R_hat:
//   M = (ω³/4π) [ β_ij (cos ξ/ξ³ + sin ξ/ξ²) - γ_ij cos ξ/ξ ] d1_i d2_j,
// ξ = ω R, β_ij = δ_ij - 3 R̂_i R̂_j, γ_ij = δ_ij - R̂_i R̂_j.
double ret_matrix_element(double omega_eg, const Eigen::Vector3d& d1, const Eigen::Vector3d& d2,
                          const Eigen::Vector3d& r_hat, double r);

// -p ln p - (1-p) ln(1-p), the entropy of the perturbative reduced state.
double binary_entropy(double p);

} // namespace alphagauge
