// dipole_model.hpp — Double-well dipole levels and dipole matrix elements from a
// 1-D finite-difference grid.

#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alphagauge {

class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what, std::string diagnostics = {})
        : std::runtime_error(what), diagnostics(std::move(diagnostics)) {}
    std::string diagnostics;
};

// H_m = (energy_scale/2) * (-d²/dζ² - iota ζ² + ζ⁴/2) on ζ in
// [-grid_halfwidth, grid_halfwidth], Dirichlet boundaries, grid_points
// interior nodes. grid_points must be odd so ζ = 0 is a node and parity is
// preserved exactly.
struct DoubleWellParams {
    double iota = 3.0;
    double energy_scale = 1.0;
    double grid_halfwidth = 8.0;
    int grid_points = 2001;
};

struct DipoleModel {
    std::vector<double> level_energies;   // ascending
    Eigen::MatrixXd zeta_matrix;          // <n|ζ|m>, symmetric, zero diagonal
    double zeta_eg = 0.0;                 // <e|ζ|g> > 0 after sign convention
    double omega_m = 0.0;                 // first transition energy
    double boundary_amplitude = 0.0;      // max |ψ0| at the grid edge / max |ψ0|
};

// Generic grid solve for H = (energy_scale/2) * (-d²/dζ² + w(ζ)). The
// double-well uses w(ζ) = -iota ζ² + ζ⁴/2; tests use it with w(ζ) = ζ² as a
// harmonic validation hook.
DipoleModel solve_grid_potential(const DoubleWellParams& params, int levels,
                                 const std::function<double(double)>& w);

DipoleModel solve_double_well(const DoubleWellParams& params, int levels);

// Normalized dipole matrix ζ̂ = zeta_matrix / zeta_eg restricted to the first
// L levels; entry (e, g) is exactly 1.
Eigen::MatrixXd dipole_operator(const DipoleModel& model, int levels);

} // namespace alphagauge
