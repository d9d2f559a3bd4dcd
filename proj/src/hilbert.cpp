#include "alphagauge/hilbert.hpp"

#include "alphagauge/eig.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

namespace alphagauge {

TensorSpace::TensorSpace(std::vector<Factor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("TensorSpace: no factors");
    std::unordered_set<std::string> seen;
    total_dim_ = 1;
    for (const auto& f : factors_) {
        if (f.dim < 1) {
            throw std::invalid_argument("TensorSpace: factor '" + f.label +
                                        "' has non-positive dim " + std::to_string(f.dim));
        }
        if (!seen.insert(f.label).second) {
            throw std::invalid_argument("TensorSpace: duplicate label '" + f.label + "'");
        }
        total_dim_ *= f.dim;
    }
}

int TensorSpace::factor_index(const std::string& label) const {
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].label == label) return static_cast<int>(i);
    }
    throw std::invalid_argument("TensorSpace: unknown label '" + label + "'");
}

bool TensorSpace::operator==(const TensorSpace& other) const {
    if (factors_.size() != other.factors_.size()) return false;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].label != other.factors_[i].label ||
            factors_[i].dim != other.factors_[i].dim) return false;
    }
    return true;
}

TensorSpace make_space(const std::vector<Factor>& factors) {
    return TensorSpace(factors);
}

double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator make_operator(const TensorSpace& space, Matrix m) {
    if (m.rows() != m.cols() || m.rows() != space.total_dim()) {
        throw std::invalid_argument("make_operator: matrix dimension does not match space");
    }
    const double scale = m.cwiseAbs().maxCoeff();
    const bool herm = hermiticity_defect(m) <= 1e-12 * std::max(scale, 1e-300);
    return {space, std::move(m), herm};
}

UnitaryOperator make_unitary(const TensorSpace& space, Matrix m) {
    if (m.rows() != m.cols() || m.rows() != space.total_dim()) {
        throw std::invalid_argument("make_unitary: matrix dimension does not match space");
    }
    const long n = m.rows();
    double defect = 0.0;
    if (n <= 2048) {
        defect = (m.adjoint() * m - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    } else {
        // Sampled column check: ||U†(U e_j) - e_j||_inf over a fixed column set
        std::mt19937_64 rng(0x5eed);
        for (int s = 0; s < 16; ++s) {
            const long j = static_cast<long>(rng() % static_cast<unsigned long>(n));
            Vector col = m.adjoint() * (m * Vector::Unit(n, j));
            col(j) -= 1.0;
            defect = std::max(defect, col.cwiseAbs().maxCoeff());
        }
    }
    if (defect > 1e-10) {
        throw std::invalid_argument("make_unitary: ||U†U - I||_max = " + std::to_string(defect) +
                                    " exceeds 1e-10");
    }
    return {space, std::move(m)};
}

Matrix annihilator(int n_cut) {
    if (n_cut < 2) throw std::invalid_argument("annihilator: n_cut must be >= 2");
    Matrix a = Matrix::Zero(n_cut, n_cut);
    for (int n = 1; n < n_cut; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

HermitianOperator embed(const Matrix& op, const TensorSpace& space, const std::string& slot) {
    const int k = space.factor_index(slot);
    const int d = space.dim(k);
    if (op.rows() != d || op.cols() != d) {
        throw std::invalid_argument("embed: operator dim " + std::to_string(op.rows()) +
                                    " does not match factor '" + slot + "' dim " + std::to_string(d));
    }
    Matrix out = (k == 0) ? op : Matrix(Matrix::Identity(space.dim(0), space.dim(0)));
    for (int i = 1; i < space.n_factors(); ++i) {
        const int di = space.dim(i);
        out = (i == k) ? kron(out, op) : kron(out, Matrix(Matrix::Identity(di, di)));
    }
    return make_operator(space, std::move(out));
}

UnitaryOperator hermitian_exp(const HermitianOperator& g, double theta) {
    if (!g.hermitian_flag) {
        throw std::invalid_argument("hermitian_exp: generator is not Hermitian");
    }
    const auto dec = eig::decompose(g.matrix);
    const long n = g.matrix.rows();
    Vector phases(n);
    for (long i = 0; i < n; ++i) {
        phases(i) = std::exp(std::complex<double>(0.0, theta * dec.values(i)));
    }
    Matrix u = dec.vectors * phases.asDiagonal() * dec.vectors.adjoint();
    return make_unitary(g.space, std::move(u));
}

HermitianOperator conjugate(const HermitianOperator& h, const UnitaryOperator& u) {
    if (!(h.space == u.space)) {
        throw std::invalid_argument("conjugate: operator and unitary live on different spaces");
    }
    Matrix out = u.matrix * h.matrix * u.matrix.adjoint();
    HermitianOperator r{h.space, std::move(out), h.hermitian_flag};
    return r;
}

Matrix kron_apply_left(const std::vector<const Matrix*>& factors, const Matrix& m) {
    long n = 1;
    for (const Matrix* f : factors) {
        if (f->rows() != f->cols()) throw std::invalid_argument("kron_apply_left: factors must be square");
        n *= f->rows();
    }
    if (m.rows() != n) throw std::invalid_argument("kron_apply_left: row dim mismatch");
    Matrix cur = m;
    long outer = 1;
    long inner = n;
    for (const Matrix* fp : factors) {
        const Matrix& f = *fp;
        const long d = f.rows();
        inner /= d;
        Matrix next = Matrix::Zero(cur.rows(), cur.cols());
        for (long o = 0; o < outer; ++o) {
            const long base = o * d * inner;
            for (long j = 0; j < d; ++j) {
                for (long i = 0; i < d; ++i) {
                    const std::complex<double> c = f(j, i);
                    if (c == std::complex<double>(0.0, 0.0)) continue;
                    next.middleRows(base + j * inner, inner) +=
                        c * cur.middleRows(base + i * inner, inner);
                }
            }
        }
        cur = std::move(next);
        outer *= d;
    }
    return cur;
}

} // namespace alphagauge
