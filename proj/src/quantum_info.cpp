#include "alphagauge/quantum_info.hpp"

#include "alphagauge/eig.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace alphagauge {

namespace {

constexpr double kTraceTol = 1e-10;
constexpr double kEigClip = 1e-14;

// Row strides of each factor for the flattened index (first factor most
// significant, matching kron ordering).
std::vector<long> strides(const TensorSpace& space) {
    const int k = space.n_factors();
    std::vector<long> s(static_cast<size_t>(k));
    long acc = 1;
    for (int i = k - 1; i >= 0; --i) {
        s[static_cast<size_t>(i)] = acc;
        acc *= space.dim(i);
    }
    return s;
}

// For a subset of factors, enumerate the flat offsets of all its index
// combinations (in lexicographic order of the subset's own multi-index).
std::vector<long> subset_offsets(const TensorSpace& space, const std::vector<int>& subset) {
    const auto str = strides(space);
    long count = 1;
    for (int f : subset) count *= space.dim(f);
    std::vector<long> offs(static_cast<size_t>(count), 0);
    long repeat = count;
    for (int f : subset) {
        const int d = space.dim(f);
        repeat /= d;
        const long stride = str[static_cast<size_t>(f)];
        for (long idx = 0; idx < count; ++idx) {
            const long digit = (idx / repeat) % d;
            offs[static_cast<size_t>(idx)] += digit * stride;
        }
    }
    return offs;
}

std::vector<int> resolve_keep(const TensorSpace& space, const std::vector<std::string>& keep,
                              const char* who) {
    if (keep.empty()) throw std::invalid_argument(std::string(who) + ": keep set is empty");
    std::unordered_set<int> chosen;
    for (const auto& label : keep) {
        if (!chosen.insert(space.factor_index(label)).second) {
            throw std::invalid_argument(std::string(who) + ": duplicate label '" + label + "'");
        }
    }
    if (static_cast<int>(chosen.size()) == space.n_factors()) {
        throw std::invalid_argument(std::string(who) + ": keep must be a proper subset of factors");
    }
    std::vector<int> in_order(chosen.begin(), chosen.end());
    std::sort(in_order.begin(), in_order.end());
    return in_order;
}

TensorSpace subspace(const TensorSpace& space, const std::vector<int>& kept) {
    std::vector<Factor> f;
    for (int i : kept) f.push_back(space.factors()[static_cast<size_t>(i)]);
    return make_space(f);
}

std::vector<int> complement(const TensorSpace& space, const std::vector<int>& kept) {
    std::vector<int> out;
    for (int i = 0; i < space.n_factors(); ++i) {
        if (std::find(kept.begin(), kept.end(), i) == kept.end()) out.push_back(i);
    }
    return out;
}

} // namespace

DensityMatrix make_density(const TensorSpace& space, Matrix m) {
    if (m.rows() != m.cols() || m.rows() != space.total_dim()) {
        throw std::invalid_argument("make_density: matrix dimension does not match space");
    }
    if (std::abs(m.trace().real() - 1.0) > kTraceTol || std::abs(m.trace().imag()) > kTraceTol) {
        throw std::invalid_argument("make_density: trace deviates from 1 by more than 1e-10");
    }
    if (hermiticity_defect(m) > 1e-10) {
        throw std::invalid_argument("make_density: matrix is not Hermitian");
    }
    const Eigen::VectorXd evals = eig::eigenvalues(m);
    if (evals(0) < -kTraceTol) {
        throw std::invalid_argument("make_density: min eigenvalue " + std::to_string(evals(0)) +
                                    " below -1e-10");
    }
    return {space, std::move(m)};
}

DensityMatrix density_from_state(const TensorSpace& space, const Vector& state) {
    if (state.size() != space.total_dim()) {
        throw std::invalid_argument("density_from_state: state dimension does not match space");
    }
    if (std::abs(state.norm() - 1.0) > kTraceTol) {
        throw std::invalid_argument("density_from_state: state is not normalized");
    }
    return {space, state * state.adjoint()};
}

DensityMatrix partial_trace(const TensorSpace& space, const Vector& pure_state,
                            const std::vector<std::string>& keep) {
    if (pure_state.size() != space.total_dim()) {
        throw std::invalid_argument("partial_trace: state dimension does not match space");
    }
    if (std::abs(pure_state.norm() - 1.0) > kTraceTol) {
        throw std::invalid_argument("partial_trace: state is not normalized");
    }
    const auto kept = resolve_keep(space, keep, "partial_trace");
    const auto traced = complement(space, kept);
    const auto keep_offs = subset_offsets(space, kept);
    const auto trace_offs = subset_offsets(space, traced);
    const long dk = static_cast<long>(keep_offs.size());
    const long dt = static_cast<long>(trace_offs.size());

    Matrix m(dk, dt);
    for (long i = 0; i < dk; ++i) {
        for (long t = 0; t < dt; ++t) {
            m(i, t) = pure_state(keep_offs[static_cast<size_t>(i)] +
                                 trace_offs[static_cast<size_t>(t)]);
        }
    }
    return make_density(subspace(space, kept), m * m.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
    const auto kept = resolve_keep(rho.space, keep, "partial_trace");
    const auto traced = complement(rho.space, kept);
    const auto keep_offs = subset_offsets(rho.space, kept);
    const auto trace_offs = subset_offsets(rho.space, traced);
    const long dk = static_cast<long>(keep_offs.size());
    const long dt = static_cast<long>(trace_offs.size());

    Matrix out = Matrix::Zero(dk, dk);
    for (long i = 0; i < dk; ++i) {
        for (long j = 0; j < dk; ++j) {
            std::complex<double> acc(0.0, 0.0);
            for (long t = 0; t < dt; ++t) {
                const long off = trace_offs[static_cast<size_t>(t)];
                acc += rho.matrix(keep_offs[static_cast<size_t>(i)] + off,
                                  keep_offs[static_cast<size_t>(j)] + off);
            }
            out(i, j) = acc;
        }
    }
    return make_density(subspace(rho.space, kept), std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho, double* clipped_mass) {
    const Eigen::VectorXd evals = eig::eigenvalues(rho.matrix);
    double s = 0.0;
    double clipped = 0.0;
    for (long i = 0; i < evals.size(); ++i) {
        const double l = evals(i);
        if (l < kEigClip) {
            clipped += l;
            continue;
        }
        s -= l * std::log(l);
    }
    if (clipped_mass != nullptr) *clipped_mass = clipped;
    return s;
}

EntanglementEntropy entanglement_entropy(const TensorSpace& space, const Vector& state,
                                         const std::vector<std::string>& cut) {
    const auto kept = resolve_keep(space, cut, "entanglement_entropy");
    const auto other = complement(space, kept);
    std::vector<std::string> other_labels;
    for (int i : other) other_labels.push_back(space.factors()[static_cast<size_t>(i)].label);

    const double s_cut = von_neumann_entropy(partial_trace(space, state, cut));
    const double s_other = von_neumann_entropy(partial_trace(space, state, other_labels));
    return {s_cut, std::abs(s_cut - s_other)};
}

double negativity(const DensityMatrix& rho, const std::string& transpose_factor) {
    if (rho.space.n_factors() != 2) {
        throw std::invalid_argument("negativity: state must live on exactly two factors");
    }
    const int tf = rho.space.factor_index(transpose_factor);
    const long da = rho.space.dim(0);
    const long db = rho.space.dim(1);

    Matrix pt(rho.matrix.rows(), rho.matrix.cols());
    for (long i = 0; i < da; ++i) {
        for (long a = 0; a < db; ++a) {
            for (long j = 0; j < da; ++j) {
                for (long b = 0; b < db; ++b) {
                    if (tf == 0) {
                        pt(i * db + a, j * db + b) = rho.matrix(j * db + a, i * db + b);
                    } else {
                        pt(i * db + a, j * db + b) = rho.matrix(i * db + b, j * db + a);
                    }
                }
            }
        }
    }
    const Eigen::VectorXd evals = eig::eigenvalues(pt);
    return 0.5 * (evals.cwiseAbs().sum() - 1.0);
}

BellStates bell_states() {
    BellStates b;
    b.space = make_space({{"dipole1", 2}, {"dipole2", 2}});
    b.psi = Vector::Zero(4);
    b.phi = Vector::Zero(4);
    const double r = 1.0 / std::sqrt(2.0);
    b.psi(0) = r;   // |g,g>
    b.psi(3) = r;   // |e,e>
    b.phi(1) = r;   // |g,e>
    b.phi(2) = r;   // |e,g>
    return b;
}

double fidelity_pure(const DensityMatrix& rho, const Vector& target) {
    if (target.size() != rho.matrix.rows()) {
        throw std::invalid_argument("fidelity_pure: dimension mismatch");
    }
    if (std::abs(target.norm() - 1.0) > kTraceTol) {
        throw std::invalid_argument("fidelity_pure: target is not normalized");
    }
    return (target.adjoint() * rho.matrix * target)(0, 0).real();
}

double purity(const DensityMatrix& rho) {
    return rho.matrix.squaredNorm();
}

double population_difference(const DensityMatrix& rho_m, const DipoleModel& model) {
    if (rho_m.matrix.rows() < 2) {
        throw std::invalid_argument("population_difference: state has no excited level");
    }
    if (rho_m.matrix.rows() > static_cast<long>(model.level_energies.size())) {
        throw std::invalid_argument("population_difference: state exceeds solved model levels");
    }
    const double p = rho_m.matrix(1, 1).real();
    return 2.0 * p - 1.0;
}

} // namespace alphagauge
