// eig.hpp — Dense Hermitian / symmetric-tridiagonal eigensolver wrappers (LAPACKE)

#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace alphagauge::eig {

class EigError : public std::runtime_error {
public:
    EigError(const std::string& routine, int info)
        : std::runtime_error(routine + " failed, info=" + std::to_string(info)),
          routine(routine), info(info) {}
    std::string routine;
    int info;
};

struct Decomposition {
    Eigen::VectorXd values;     // ascending
    Eigen::MatrixXcd vectors;   // columns
};

struct RealDecomposition {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

// Full eigendecomposition of a Hermitian matrix. Uses the real-symmetric path
// when the input has no imaginary part.
Decomposition decompose(const Eigen::MatrixXcd& H);

// Lowest k eigenpairs of a Hermitian matrix.
Decomposition lowest(const Eigen::MatrixXcd& H, int k);

// All eigenvalues, ascending, no vectors.
Eigen::VectorXd eigenvalues(const Eigen::MatrixXcd& H);

// Real symmetric matrix, full decomposition.
RealDecomposition decompose_real(const Eigen::MatrixXd& S);

// Lowest k eigenpairs of a real symmetric tridiagonal matrix given its
// diagonal and off-diagonal.
RealDecomposition lowest_tridiagonal(const Eigen::VectorXd& diag,
                                     const Eigen::VectorXd& offdiag, int k);

} // namespace alphagauge::eig
