#include "alphagauge/perturbation.hpp"

#include <cmath>
#include <numbers>

namespace alphagauge {

PerturbativePoint beta_alpha(double eta, double omega, double omega_m, double alpha) {
    if (omega <= 0.0 || omega_m <= 0.0) {
        throw std::invalid_argument("beta_alpha: frequencies must be positive");
    }
    PerturbativePoint p;
    p.eta = eta;
    p.omega = omega;
    p.omega_m = omega_m;
    p.alpha = alpha;
    p.beta = eta * (omega_m / (omega + omega_m) - alpha);
    p.beta_local = -eta * omega / (omega + omega_m);
    p.s_static = (1.0 - alpha) * eta;
    p.p = p.beta * p.beta;
    return p;
}

DensityMatrix perturbative_reduced_state(const PerturbativePoint& point) {
    if (point.p > 1.0) {
        throw std::invalid_argument("perturbative_reduced_state: p = " + std::to_string(point.p) +
                                    " outside perturbative validity");
    }
    Matrix rho = Matrix::Zero(2, 2);
    rho(0, 0) = 1.0 - point.p;
    rho(1, 1) = point.p;
    return make_density(make_space({{"dipole", 2}}), std::move(rho));
}

double spontaneous_rate(double omega_eg, double d_eg_sq) {
    if (omega_eg <= 0.0 || d_eg_sq <= 0.0) {
        throw std::invalid_argument("spontaneous_rate: inputs must be positive");
    }
    return omega_eg * omega_eg * omega_eg * d_eg_sq / (3.0 * std::numbers::pi);
}

double ret_matrix_element(double omega_eg, const Eigen::Vector3d& d1, const Eigen::Vector3d& d2,
                          const Eigen::Vector3d& r_hat, double r) {
    if (r <= 0.0) throw std::invalid_argument("ret_matrix_element: R must be > 0");
    if (omega_eg <= 0.0) throw std::invalid_argument("ret_matrix_element: omega_eg must be > 0");
    if (std::abs(r_hat.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("ret_matrix_element: R_hat must be a unit vector");
    }
    const double xi = omega_eg * r;
    const double dd = d1.dot(d2);
    const double d1r = d1.dot(r_hat);
    const double d2r = d2.dot(r_hat);
    const double beta_c = dd - 3.0 * d1r * d2r;   // β_ij d1_i d2_j
    const double gamma_c = dd - d1r * d2r;        // γ_ij d1_i d2_j
    const double w3 = omega_eg * omega_eg * omega_eg;
    return w3 / (4.0 * std::numbers::pi) *
           (beta_c * (std::cos(xi) / (xi * xi * xi) + std::sin(xi) / (xi * xi)) -
            gamma_c * std::cos(xi) / xi);
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p must be in [0,1]");
    double s = 0.0;
    if (p > 0.0) s -= p * std::log(p);
    if (p < 1.0) s -= (1.0 - p) * std::log(1.0 - p);
    return s;
}

} // namespace alphagauge
