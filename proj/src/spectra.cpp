#include "alphagauge/spectra.hpp"

#include "alphagauge/eig.hpp"

#include <cmath>
#include <sstream>

namespace alphagauge {

namespace {

std::string format_trace(const std::vector<CutoffPoint>& trace) {
    std::ostringstream os;
    for (const auto& p : trace) {
        os << "(" << p.photon_cutoff << "," << p.dipole_levels << "," << p.energy << ")";
    }
    return os.str();
}

} // namespace

GroundStateResult ground_state(const HermitianOperator& h) {
    if (!h.hermitian_flag) throw std::invalid_argument("ground_state: operator is not Hermitian");
    const long n = h.matrix.rows();

    GroundStateResult r;
    if (n >= 2 && n <= 1024) {
        const auto dec = eig::decompose(h.matrix);
        r.energy = dec.values(0);
        r.gap = dec.values(1) - dec.values(0);
        r.state = dec.vectors.col(0);
    } else if (n >= 2) {
        // Same lowest pair through the selective range driver; the full
        // decomposition is not needed above desk scale.
        const auto dec = eig::lowest(h.matrix, 2);
        r.energy = dec.values(0);
        r.gap = dec.values(1) - dec.values(0);
        r.state = dec.vectors.col(0);
    } else {
        r.energy = h.matrix(0, 0).real();
        r.gap = 0.0;
        r.state = Vector::Ones(1);
    }

    r.state /= r.state.norm();
    int imax = 0;
    r.state.cwiseAbs().maxCoeff(&imax);
    const std::complex<double> c = r.state(imax);
    r.state *= std::conj(c) / std::abs(c);

    const double h_scale = h.matrix.cwiseAbs().maxCoeff();
    r.residual = (h.matrix * r.state - r.energy * r.state).cwiseAbs().maxCoeff() /
                 std::max(h_scale, 1e-300);
    if (r.residual > 1e-8) {
        throw eig::EigError("ground_state residual " + std::to_string(r.residual), 0);
    }
    r.degeneracy_warning = r.gap < 1e-8 * std::max(1.0, std::abs(r.energy));
    return r;
}

GroundStateResult converge_cutoffs(const HamiltonianBuilder& builder, double tol,
                                   const CutoffLimits& limits) {
    if (tol <= 0.0) throw std::invalid_argument("converge_cutoffs: tol must be > 0");

    std::vector<CutoffPoint> trace;
    int n_ph = limits.photon_start;
    int lv = limits.level_start;

    HermitianOperator h = builder(n_ph, lv);
    double energy = eig::lowest(h.matrix, 1).values(0);
    trace.push_back({n_ph, lv, energy});

    auto fail = [&](const std::string& dir) -> void {
        std::ostringstream diag;
        diag << "ceiling reached stepping " << dir << " (photon_max=" << limits.photon_max
             << ", level_max=" << limits.level_max << "); trace " << format_trace(trace);
        throw CutoffCeilingError("converge_cutoffs: cutoff ceiling reached", trace, diag.str());
    };

    bool photon_stable = false;
    bool level_stable = false;
    while (!(photon_stable && level_stable)) {
        if (!photon_stable) {
            if (n_ph + limits.photon_step > limits.photon_max) fail("photon cutoff");
            n_ph += limits.photon_step;
            h = builder(n_ph, lv);
            const double e_new = eig::lowest(h.matrix, 1).values(0);
            trace.push_back({n_ph, lv, e_new});
            photon_stable = std::abs(e_new - energy) < tol * std::abs(e_new);
            if (!photon_stable) level_stable = false;
            energy = e_new;
        }
        if (!level_stable) {
            if (lv + limits.level_step > limits.level_max) fail("dipole levels");
            lv += limits.level_step;
            h = builder(n_ph, lv);
            const double e_new = eig::lowest(h.matrix, 1).values(0);
            trace.push_back({n_ph, lv, e_new});
            level_stable = std::abs(e_new - energy) < tol * std::abs(e_new);
            if (!level_stable) photon_stable = false;
            energy = e_new;
        }
    }

    GroundStateResult r = ground_state(h);
    r.converged = true;
    r.cutoff_trace = std::move(trace);
    return r;
}

double energy_shift(const DipoleModel& model, const ModelConfig& cfg_at_eta,
                    const ModelConfig& cfg_at_zero, double tol, const CutoffLimits& limits) {
    if (cfg_at_zero.eta != 0.0) {
        throw std::invalid_argument("energy_shift: cfg_at_zero must have eta = 0");
    }
    auto make_builder = [&model](ModelConfig cfg) {
        return [&model, cfg](int n_ph, int lv) {
            ModelConfig c = cfg;
            c.photon_cutoff = n_ph;
            c.dipole_levels = lv;
            return build_alpha_gauge(model, c);
        };
    };
    const GroundStateResult at_eta = converge_cutoffs(make_builder(cfg_at_eta), tol, limits);
    const GroundStateResult at_zero = converge_cutoffs(make_builder(cfg_at_zero), tol, limits);
    return at_eta.energy - at_zero.energy;
}

} // namespace alphagauge
