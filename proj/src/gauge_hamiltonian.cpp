#include "alphagauge/gauge_hamiltonian.hpp"

#include "alphagauge/eig.hpp"

#include <cmath>

namespace alphagauge {

const char* const kModeLabel = "mode";
const char* const kDipoleLabel = "dipole";
const char* const kDipole1Label = "dipole1";
const char* const kDipole2Label = "dipole2";

void validate_config(const ModelConfig& cfg) {
    if (cfg.omega <= 0.0) throw std::invalid_argument("ModelConfig: omega must be > 0");
    if (cfg.eta < 0.0) throw std::invalid_argument("ModelConfig: eta must be >= 0");
    if (cfg.photon_cutoff < 2) throw std::invalid_argument("ModelConfig: photon_cutoff must be >= 2");
    if (cfg.dipole_levels < 2) throw std::invalid_argument("ModelConfig: dipole_levels must be >= 2");
    if (cfg.n_dipoles != 1 && cfg.n_dipoles != 2) {
        throw std::invalid_argument("ModelConfig: n_dipoles must be 1 or 2");
    }
}

namespace {

Matrix mode_energy(int n_cut, double omega) {
    const Matrix a = annihilator(n_cut);
    return omega * (a.adjoint() * a + 0.5 * Matrix::Identity(n_cut, n_cut));
}

Matrix mode_momentum_factor(int n_cut) {   // a† - a (anti-Hermitian)
    const Matrix a = annihilator(n_cut);
    return a.adjoint() - a;
}

Matrix level_diagonal(const DipoleModel& model, int levels) {
    Matrix h = Matrix::Zero(levels, levels);
    for (int k = 0; k < levels; ++k) h(k, k) = model.level_energies[static_cast<size_t>(k)];
    return h;
}

// (A_1 ⊗ ... ⊗ A_k) M (A_1 ⊗ ... ⊗ A_k)†
Matrix sandwich(const std::vector<const Matrix*>& factors, const Matrix& m) {
    Matrix t = kron_apply_left(factors, m);
    return kron_apply_left(factors, t.adjoint()).adjoint();
}

} // namespace

HermitianOperator build_dipole_gauge_one(const DipoleModel& model, const ModelConfig& cfg) {
    validate_config(cfg);
    if (cfg.n_dipoles != 1) throw std::invalid_argument("build_dipole_gauge_one: n_dipoles must be 1");
    const int levels = cfg.dipole_levels;
    const int n_ph = cfg.photon_cutoff;
    const TensorSpace space = make_space({{kDipoleLabel, levels}, {kModeLabel, n_ph}});

    const Matrix zeta = dipole_operator(model, levels).cast<std::complex<double>>();
    const Matrix id_m = Matrix::Identity(levels, levels);
    const Matrix id_ph = Matrix::Identity(n_ph, n_ph);
    const std::complex<double> iwe(0.0, cfg.omega * cfg.eta);

    Matrix h = kron(level_diagonal(model, levels) + cfg.omega * cfg.eta * cfg.eta * zeta * zeta, id_ph)
             + kron(id_m, mode_energy(n_ph, cfg.omega))
             + iwe * kron(zeta, mode_momentum_factor(n_ph));
    return make_operator(space, std::move(h));
}

HermitianOperator build_dipole_gauge_two(const DipoleModel& model, const ModelConfig& cfg) {
    validate_config(cfg);
    if (cfg.n_dipoles != 2) throw std::invalid_argument("build_dipole_gauge_two: n_dipoles must be 2");
    const int levels = cfg.dipole_levels;
    const int n_ph = cfg.photon_cutoff;
    const TensorSpace space =
        make_space({{kDipole1Label, levels}, {kDipole2Label, levels}, {kModeLabel, n_ph}});

    const Matrix zeta = dipole_operator(model, levels).cast<std::complex<double>>();
    const Matrix h_m = level_diagonal(model, levels);
    const Matrix quad = cfg.omega * cfg.eta * cfg.eta * zeta * zeta;
    const Matrix id_m = Matrix::Identity(levels, levels);
    const Matrix id_ph = Matrix::Identity(n_ph, n_ph);
    const std::complex<double> iwe(0.0, cfg.omega * cfg.eta);
    const Matrix pi_f = mode_momentum_factor(n_ph);

    Matrix h = kron(kron(h_m + quad, id_m), id_ph)
             + kron(kron(id_m, h_m + quad), id_ph)
             + kron(kron(id_m, id_m), mode_energy(n_ph, cfg.omega))
             + iwe * kron(kron(zeta, id_m), pi_f)
             + iwe * kron(kron(id_m, zeta), pi_f);
    return make_operator(space, std::move(h));
}

HermitianOperator build_dipole_gauge(const DipoleModel& model, const ModelConfig& cfg) {
    return cfg.n_dipoles == 2 ? build_dipole_gauge_two(model, cfg)
                              : build_dipole_gauge_one(model, cfg);
}

UnitaryOperator gauge_unitary(const DipoleModel& model, const ModelConfig& cfg,
                              double alpha_from, double alpha_to) {
    validate_config(cfg);
    const int levels = cfg.dipole_levels;
    const int n_ph = cfg.photon_cutoff;
    const Matrix zeta = dipole_operator(model, levels).cast<std::complex<double>>();
    const Matrix a = annihilator(n_ph);
    const Matrix x = a + a.adjoint();

    TensorSpace space;
    Matrix g;
    if (cfg.n_dipoles == 1) {
        space = make_space({{kDipoleLabel, levels}, {kModeLabel, n_ph}});
        g = cfg.eta * kron(zeta, x);
    } else {
        space = make_space({{kDipole1Label, levels}, {kDipole2Label, levels}, {kModeLabel, n_ph}});
        const Matrix id_m = Matrix::Identity(levels, levels);
        g = cfg.eta * (kron(kron(zeta, id_m), x) + kron(kron(id_m, zeta), x));
    }
    return hermitian_exp(make_operator(space, std::move(g)), alpha_from - alpha_to);
}

HermitianOperator build_alpha_gauge(const DipoleModel& model, const ModelConfig& cfg) {
    HermitianOperator h_dip = build_dipole_gauge(model, cfg);
    const double theta = 1.0 - cfg.alpha;
    if (theta == 0.0 || cfg.eta == 0.0) return h_dip;

    // R_{1α} = exp(iθ η Σ ζ̂_i ⊗ x) with θ = 1 - α. The generator's eigenbasis
    // factorizes as V_ζ^{⊗n} ⊗ V_x, so the conjugation needs only the small
    // per-factor eigendecompositions.
    const int levels = cfg.dipole_levels;
    const int n_ph = cfg.photon_cutoff;
    const auto zdec = eig::decompose_real(dipole_operator(model, levels));
    Eigen::VectorXd x_diag = Eigen::VectorXd::Zero(n_ph);
    Eigen::VectorXd x_off(n_ph - 1);
    for (int n = 1; n < n_ph; ++n) x_off(n - 1) = std::sqrt(static_cast<double>(n));
    const auto xdec = eig::lowest_tridiagonal(x_diag, x_off, n_ph);

    const Matrix vz = zdec.vectors.cast<std::complex<double>>();
    const Matrix vx = xdec.vectors.cast<std::complex<double>>();
    std::vector<const Matrix*> w;
    if (cfg.n_dipoles == 1) w = {&vz, &vx};
    else w = {&vz, &vz, &vx};

    const long dim = h_dip.space.total_dim();
    Vector phases(dim);
    long idx = 0;
    if (cfg.n_dipoles == 1) {
        for (int i = 0; i < levels; ++i) {
            for (int k = 0; k < n_ph; ++k) {
                phases(idx++) = std::exp(std::complex<double>(
                    0.0, theta * cfg.eta * zdec.values(i) * xdec.values(k)));
            }
        }
    } else {
        for (int i = 0; i < levels; ++i) {
            for (int j = 0; j < levels; ++j) {
                for (int k = 0; k < n_ph; ++k) {
                    phases(idx++) = std::exp(std::complex<double>(
                        0.0, theta * cfg.eta * (zdec.values(i) + zdec.values(j)) * xdec.values(k)));
                }
            }
        }
    }

    std::vector<const Matrix*> w_adj;
    std::vector<Matrix> w_adj_store;
    w_adj_store.reserve(w.size());
    for (const Matrix* f : w) w_adj_store.push_back(f->adjoint());
    for (const Matrix& f : w_adj_store) w_adj.push_back(&f);

    Matrix t = sandwich(w_adj, h_dip.matrix);                    // W† H' W
    t = phases.asDiagonal() * t * phases.conjugate().asDiagonal();
    Matrix h = sandwich(w, t);                                   // W (...) W†
    h = 0.5 * (h + h.adjoint().eval());
    return {h_dip.space, std::move(h), true};
}

double direct_interaction_coefficient(const HermitianOperator& h_alpha,
                                      const DipoleModel& model, const ModelConfig& cfg) {
    validate_config(cfg);
    if (cfg.n_dipoles != 2) {
        throw std::invalid_argument("direct_interaction_coefficient: requires a two-dipole Hamiltonian");
    }
    const int levels = cfg.dipole_levels;
    const int n_ph = cfg.photon_cutoff;
    if (h_alpha.space.total_dim() != static_cast<long>(levels) * levels * n_ph) {
        throw std::invalid_argument("direct_interaction_coefficient: operator does not match cfg");
    }
    const Eigen::MatrixXd zeta = dipole_operator(model, levels);

    // Photon-vacuum block of H_α. Single-dipole and photon-coupled parts are
    // trace-orthogonal to ζ̂₁ ⊗ ζ̂₂ there because tr ζ̂ = 0 (parity), so the
    // block projection isolates the ζ̂₁ ⊗ ζ̂₂ ⊗ I_ph coefficient. (Projecting
    // against ζ̂₁ ⊗ ζ̂₂ ⊗ I over the whole truncated mode space instead would
    // pick up the compensating defect the truncation corner carries — B
    // commutes with R so that full trace is identically zero.)
    const int d2 = levels * levels;
    Matrix vac(d2, d2);
    for (int r = 0; r < d2; ++r) {
        for (int c = 0; c < d2; ++c) {
            vac(r, c) = h_alpha.matrix(static_cast<long>(r) * n_ph, static_cast<long>(c) * n_ph);
        }
    }
    const Matrix b = kron(zeta.cast<std::complex<double>>(), zeta.cast<std::complex<double>>());
    const double denom = std::pow(zeta.squaredNorm(), 2);
    return ((vac * b.adjoint()).trace() / denom).real();
}

double jc_gauge(double omega, double omega_m) {
    if (omega <= 0.0 || omega_m <= 0.0) {
        throw std::invalid_argument("jc_gauge: frequencies must be positive");
    }
    return omega_m / (omega + omega_m);
}

HermitianOperator truncate_two_level(const HermitianOperator& h_alpha, const ModelConfig& cfg) {
    validate_config(cfg);
    const int levels = cfg.dipole_levels;
    const int n_ph = cfg.photon_cutoff;

    std::vector<long> sel;
    std::vector<Factor> trunc_factors;
    for (const auto& f : h_alpha.space.factors()) {
        trunc_factors.push_back({f.label, f.label == kModeLabel ? f.dim : 2});
    }
    if (cfg.n_dipoles == 1) {
        if (h_alpha.space.total_dim() != static_cast<long>(levels) * n_ph) {
            throw std::invalid_argument("truncate_two_level: operator does not match cfg");
        }
        for (long i = 0; i < 2; ++i)
            for (long k = 0; k < n_ph; ++k) sel.push_back(i * n_ph + k);
    } else {
        if (h_alpha.space.total_dim() != static_cast<long>(levels) * levels * n_ph) {
            throw std::invalid_argument("truncate_two_level: operator does not match cfg");
        }
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j)
                for (long k = 0; k < n_ph; ++k) sel.push_back((i * levels + j) * n_ph + k);
    }

    const long d = static_cast<long>(sel.size());
    Matrix out(d, d);
    for (long r = 0; r < d; ++r)
        for (long c = 0; c < d; ++c) out(r, c) = h_alpha.matrix(sel[r], sel[c]);
    return {make_space(trunc_factors), std::move(out), h_alpha.hermitian_flag};
}

} // namespace alphagauge
