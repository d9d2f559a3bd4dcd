// quantum_info.hpp — Reduced states and subsystem measures: partial trace,
// von Neumann entropy, negativity, Bell states, fidelity, purity, populations.

#pragma once

#include "alphagauge/dipole_model.hpp"
#include "alphagauge/hilbert.hpp"

namespace alphagauge {

// Positive semidefinite Hermitian matrix with unit trace on a TensorSpace.
struct DensityMatrix {
    TensorSpace space;
    Matrix matrix;
};

// Validates trace (1e-10), hermiticity, and min eigenvalue >= -1e-10.
DensityMatrix make_density(const TensorSpace& space, Matrix m);

DensityMatrix density_from_state(const TensorSpace& space, const Vector& state);

// Reduced density matrix on the kept factors (space factor order preserved).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep);
DensityMatrix partial_trace(const TensorSpace& space, const Vector& pure_state,
                            const std::vector<std::string>& keep);

// S = -sum λ ln λ, eigenvalues below 1e-14 dropped; natural log. The dropped
// mass is reported through clipped_mass when given.
double von_neumann_entropy(const DensityMatrix& rho, double* clipped_mass = nullptr);

struct EntanglementEntropy {
    double value = 0.0;        // entropy of the reduced state on the cut side
    double discrepancy = 0.0;  // |S(side) - S(complement)|, zero for exact states
};

// Entropy of entanglement of a pure state across the cut given by the factor
// labels of one side.
EntanglementEntropy entanglement_entropy(const TensorSpace& space, const Vector& state,
                                         const std::vector<std::string>& cut);

// N = (||rho^{T_1}||_1 - 1) / 2 with the partial transpose over the named
// factor of a two-factor state.
double negativity(const DensityMatrix& rho, const std::string& transpose_factor);

struct BellStates {
    TensorSpace space;   // (dipole1 2, dipole2 2), ordering (g, e) per factor
    Vector psi;          // (|e,e> + |g,g>)/sqrt(2)
    Vector phi;          // (|e,g> + |g,e>)/sqrt(2)
};
BellStates bell_states();

// <target|rho|target> (squared-overlap convention).
double fidelity_pure(const DensityMatrix& rho, const Vector& target);

// tr(rho^2).
double purity(const DensityMatrix& rho);

// 2 p - 1 with p the population of the first excited bare level.
double population_difference(const DensityMatrix& rho_m, const DipoleModel& model);

} // namespace alphagauge
