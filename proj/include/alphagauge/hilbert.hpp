// hilbert.hpp — Tensor-product space bookkeeping and the minimal operator algebra:
// ladder operators, Kronecker embedding, Hermitian exponentials, conjugation.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace alphagauge {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct Factor {
    std::string label;
    int dim = 0;
};

// Ordered list of subsystem factors. The order is fixed at creation and all
// embeddings and partial traces honor it: the first factor is the most
// significant index (kron(A, B) puts A first).
class TensorSpace {
public:
    TensorSpace() = default;
    explicit TensorSpace(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    long total_dim() const { return total_dim_; }
    int n_factors() const { return static_cast<int>(factors_.size()); }

    // Index of the factor with the given label; throws on unknown label.
    int factor_index(const std::string& label) const;
    int dim(int index) const { return factors_.at(static_cast<size_t>(index)).dim; }

    bool operator==(const TensorSpace& other) const;

private:
    std::vector<Factor> factors_;
    long total_dim_ = 0;
};

TensorSpace make_space(const std::vector<Factor>& factors);

// Square complex matrix on a TensorSpace. hermitian_flag is measured at
// construction: max|M - M†| <= 1e-12 * max|M|.
struct HermitianOperator {
    TensorSpace space;
    Matrix matrix;
    bool hermitian_flag = false;
};

struct UnitaryOperator {
    TensorSpace space;
    Matrix matrix;
};

// Build an operator on `space`, measuring the hermitian flag and validating
// the matrix dimension.
HermitianOperator make_operator(const TensorSpace& space, Matrix m);

// Validate ||U†U - I||_max <= 1e-10 and wrap. For dims above 2048 the check
// samples columns instead of forming the full product.
UnitaryOperator make_unitary(const TensorSpace& space, Matrix m);

double hermiticity_defect(const Matrix& m);

// Truncated bosonic annihilation operator: a[n-1, n] = sqrt(n).
Matrix annihilator(int n_cut);

// Plain Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

// Embed a single-factor operator into the full space with identities on all
// other factors.
HermitianOperator embed(const Matrix& op, const TensorSpace& space, const std::string& slot);

// U = exp(i*theta*G) for Hermitian G, via eigendecomposition G = V diag(w) V†.
UnitaryOperator hermitian_exp(const HermitianOperator& g, double theta);

// U H U†; the hermitian flag of H is preserved.
HermitianOperator conjugate(const HermitianOperator& h, const UnitaryOperator& u);

// Multiply M by (A_1 ⊗ ... ⊗ A_k) acting on the row index, factor by factor.
// Each A_i must be square with dimension matching factor i. Cost is
// O(n^2 * sum(d_i)) instead of materializing the Kronecker product.
Matrix kron_apply_left(const std::vector<const Matrix*>& factors, const Matrix& m);

} // namespace alphagauge
