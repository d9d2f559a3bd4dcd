#include "alphagauge/eig.hpp"

#include <lapacke.h>

#include <vector>

namespace alphagauge::eig {

namespace {

lapack_complex_double* lp(Eigen::MatrixXcd& m) {
    return reinterpret_cast<lapack_complex_double*>(m.data());
}

bool is_real(const Eigen::MatrixXcd& H) {
    return H.imag().cwiseAbs().maxCoeff() == 0.0;
}

void check_square(const Eigen::MatrixXcd& H, const char* who) {
    if (H.rows() != H.cols() || H.rows() == 0) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
    }
}

} // namespace

RealDecomposition decompose_real(const Eigen::MatrixXd& S) {
    if (S.rows() != S.cols() || S.rows() == 0) {
        throw std::invalid_argument("decompose_real: matrix must be square and non-empty");
    }
    const lapack_int n = static_cast<lapack_int>(S.rows());
    RealDecomposition out;
    out.vectors = S;   // overwritten with eigenvectors
    out.values.resize(n);
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n,
                                           out.vectors.data(), n, out.values.data());
    if (info != 0) throw EigError("dsyevd", static_cast<int>(info));
    return out;
}

Decomposition decompose(const Eigen::MatrixXcd& H) {
    check_square(H, "decompose");
    if (is_real(H)) {
        RealDecomposition r = decompose_real(H.real());
        return {std::move(r.values), r.vectors.cast<std::complex<double>>()};
    }
    const lapack_int n = static_cast<lapack_int>(H.rows());
    Decomposition out;
    out.vectors = H;
    out.values.resize(n);
    const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'U', n,
                                           lp(out.vectors), n, out.values.data());
    if (info != 0) throw EigError("zheevd", static_cast<int>(info));
    return out;
}

Decomposition lowest(const Eigen::MatrixXcd& H, int k) {
    check_square(H, "lowest");
    const lapack_int n = static_cast<lapack_int>(H.rows());
    if (k < 1 || k > n) throw std::invalid_argument("lowest: k out of range");
    Eigen::MatrixXcd work = H;
    Decomposition out;
    out.values.resize(n);
    out.vectors.resize(n, k);
    std::vector<lapack_int> isuppz(2 * static_cast<size_t>(k));
    lapack_int m = 0;
    const lapack_int info = LAPACKE_zheevr(LAPACK_COL_MAJOR, 'V', 'I', 'U', n,
                                           lp(work), n, 0.0, 0.0, 1, k, 0.0, &m,
                                           out.values.data(), lp(out.vectors), n,
                                           isuppz.data());
    if (info != 0) throw EigError("zheevr", static_cast<int>(info));
    if (m != k) throw EigError("zheevr(m!=k)", static_cast<int>(m));
    out.values.conservativeResize(k);
    return out;
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXcd& H) {
    check_square(H, "eigenvalues");
    const lapack_int n = static_cast<lapack_int>(H.rows());
    Eigen::VectorXd w(n);
    if (is_real(H)) {
        Eigen::MatrixXd work = H.real();
        const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'U', n,
                                               work.data(), n, w.data());
        if (info != 0) throw EigError("dsyevd", static_cast<int>(info));
        return w;
    }
    Eigen::MatrixXcd work = H;
    const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'U', n,
                                           lp(work), n, w.data());
    if (info != 0) throw EigError("zheevd", static_cast<int>(info));
    return w;
}

RealDecomposition lowest_tridiagonal(const Eigen::VectorXd& diag,
                                     const Eigen::VectorXd& offdiag, int k) {
    const lapack_int n = static_cast<lapack_int>(diag.size());
    if (n == 0) throw std::invalid_argument("lowest_tridiagonal: empty diagonal");
    if (offdiag.size() != n - 1) {
        throw std::invalid_argument("lowest_tridiagonal: offdiag must have n-1 entries");
    }
    if (k < 1 || k > n) throw std::invalid_argument("lowest_tridiagonal: k out of range");
    Eigen::VectorXd d = diag;
    Eigen::VectorXd e(n);   // stevr wants length n workspace for the off-diagonal
    e.head(n - 1) = offdiag;
    RealDecomposition out;
    out.values.resize(n);
    out.vectors.resize(n, k);
    std::vector<lapack_int> isuppz(2 * static_cast<size_t>(k));
    lapack_int m = 0;
    const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n,
                                           d.data(), e.data(), 0.0, 0.0, 1, k, 0.0, &m,
                                           out.values.data(), out.vectors.data(), n,
                                           isuppz.data());
    if (info != 0) throw EigError("dstevr", static_cast<int>(info));
    if (m != k) throw EigError("dstevr(m!=k)", static_cast<int>(m));
    out.values.conservativeResize(k);
    return out;
}

} // namespace alphagauge::eig
