#include "alphagauge/dipole_model.hpp"

#include "alphagauge/eig.hpp"

#include <cmath>
#include <sstream>

namespace alphagauge {

namespace {

void validate(const DoubleWellParams& p, int levels) {
    if (p.energy_scale <= 0.0) throw std::invalid_argument("energy_scale must be > 0");
    if (p.grid_halfwidth <= 0.0) throw std::invalid_argument("grid_halfwidth must be > 0");
    if (p.grid_points < 3) throw std::invalid_argument("grid_points must be >= 3");
    if (p.grid_points % 2 == 0) {
        throw std::invalid_argument("grid_points must be odd so that ζ=0 is a grid node");
    }
    if (levels < 2) throw std::invalid_argument("levels must be >= 2");
    if (levels > p.grid_points / 10) {
        throw std::invalid_argument("levels must be <= grid_points/10 for grid convergence");
    }
}

} // namespace

DipoleModel solve_grid_potential(const DoubleWellParams& params, int levels,
                                 const std::function<double(double)>& w) {
    validate(params, levels);
    const int n = params.grid_points;
    const double h = 2.0 * params.grid_halfwidth / (n + 1);
    const double pref = 0.5 * params.energy_scale;

    // Interior nodes ζ_i = -ζ_max + (i+1) h; ψ(±ζ_max) = 0.
    Eigen::VectorXd zeta(n), diag(n);
    for (int i = 0; i < n; ++i) {
        zeta(i) = -params.grid_halfwidth + (i + 1) * h;
        diag(i) = pref * (2.0 / (h * h) + w(zeta(i)));
    }
    Eigen::VectorXd off = Eigen::VectorXd::Constant(n - 1, -pref / (h * h));

    auto dec = eig::lowest_tridiagonal(diag, off, levels);

    // Grid-quadrature normalization and a canonical sign per vector.
    for (int k = 0; k < levels; ++k) {
        auto col = dec.vectors.col(k);
        col /= col.norm() * std::sqrt(h);
        int imax = 0;
        col.cwiseAbs().maxCoeff(&imax);
        if (col(imax) < 0.0) col = -col;
    }

    DipoleModel model;
    model.level_energies.assign(dec.values.data(), dec.values.data() + levels);
    for (int k = 1; k < levels; ++k) {
        if (!(model.level_energies[k] > model.level_energies[k - 1])) {
            throw ConvergenceError("solve_grid_potential: level energies not strictly increasing",
                                   "levels " + std::to_string(k - 1) + "," + std::to_string(k));
        }
    }
    model.omega_m = model.level_energies[1] - model.level_energies[0];

    model.zeta_matrix = h * (dec.vectors.transpose() * zeta.asDiagonal() * dec.vectors);
    model.zeta_matrix = 0.5 * (model.zeta_matrix + model.zeta_matrix.transpose().eval());
    if (model.zeta_matrix(0, 1) < 0.0) {
        dec.vectors.col(1) = -dec.vectors.col(1);
        model.zeta_matrix.row(1) = -model.zeta_matrix.row(1);
        model.zeta_matrix.col(1) = -model.zeta_matrix.col(1);
    }
    // Parity selection rule: the k-th level of an even potential has parity
    // (-1)^k and ζ is odd, so equal-parity matrix elements vanish identically.
    for (int a = 0; a < levels; ++a) {
        for (int b = 0; b < levels; ++b) {
            if ((a + b) % 2 == 0) model.zeta_matrix(a, b) = 0.0;
        }
    }
    model.zeta_eg = model.zeta_matrix(0, 1);

    const double peak = dec.vectors.col(0).cwiseAbs().maxCoeff();
    model.boundary_amplitude =
        std::max(std::abs(dec.vectors(0, 0)), std::abs(dec.vectors(n - 1, 0))) / peak;
    if (model.boundary_amplitude >= 1e-8) {
        std::ostringstream diag_msg;
        diag_msg << "boundary amplitude " << model.boundary_amplitude
                 << " at grid_halfwidth " << params.grid_halfwidth
                 << ", grid_points " << params.grid_points;
        throw ConvergenceError("solve_grid_potential: ground state reaches the grid boundary",
                               diag_msg.str());
    }
    return model;
}

DipoleModel solve_double_well(const DoubleWellParams& params, int levels) {
    const double iota = params.iota;
    return solve_grid_potential(params, levels, [iota](double z) {
        return -iota * z * z + 0.5 * z * z * z * z;
    });
}

Eigen::MatrixXd dipole_operator(const DipoleModel& model, int levels) {
    const int solved = static_cast<int>(model.level_energies.size());
    if (levels < 1 || levels > solved) {
        throw std::invalid_argument("dipole_operator: levels exceeds solved model data");
    }
    return model.zeta_matrix.topLeftCorner(levels, levels) / model.zeta_eg;
}

} // namespace alphagauge
