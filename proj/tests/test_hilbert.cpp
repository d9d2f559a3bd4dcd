#include "alphagauge/hilbert.hpp"

#include "alphagauge/eig.hpp"

#include <doctest.h>

#include <random>

using namespace alphagauge;

namespace {

Matrix random_hermitian(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = std::complex<double>(g(rng), g(rng));
    }
    return Matrix(0.5 * (m + m.adjoint()));
}

Matrix random_matrix(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = std::complex<double>(g(rng), g(rng));
    }
    return m;
}

} // namespace

TEST_CASE("make_space computes total dims and rejects bad factors") {
    CHECK(make_space({{"dipole", 4}, {"mode", 30}}).total_dim() == 120);
    CHECK(make_space({{"d1", 2}, {"d2", 2}, {"mode", 20}}).total_dim() == 80);
    CHECK_THROWS_AS(make_space({{"mode", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_space({{"a", 2}, {"a", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_space({}), std::invalid_argument);
    CHECK_THROWS_AS(make_space({{"a", -1}}), std::invalid_argument);
}

TEST_CASE("factor lookup") {
    const TensorSpace s = make_space({{"dipole", 3}, {"mode", 5}});
    CHECK(s.factor_index("mode") == 1);
    CHECK(s.dim(1) == 5);
    CHECK_THROWS_AS(s.factor_index("nope"), std::invalid_argument);
}

TEST_CASE("annihilator ladder rules") {
    CHECK_THROWS_AS(annihilator(1), std::invalid_argument);

    // n_cut = 2: a|1> = |0>
    const Matrix a2 = annihilator(2);
    Vector one = Vector::Zero(2);
    one(1) = 1.0;
    CHECK((a2 * one - Vector::Unit(2, 0)).norm() == doctest::Approx(0.0));

    // n_cut = 3: <1|a|2> = sqrt(2)
    const Matrix a3 = annihilator(3);
    CHECK(a3(1, 2).real() == doctest::Approx(std::sqrt(2.0)));

    // Truncated commutator: identity except the bottom-right entry 1 - n_cut.
    // Off-diagonal entries vanish exactly; the diagonal carries sqrt(n)^2
    // rounding only.
    const int n = 10;
    const Matrix a = annihilator(n);
    const Matrix comm = a * a.adjoint() - a.adjoint() * a;
    Matrix expected = Matrix::Identity(n, n);
    expected(n - 1, n - 1) = 1.0 - n;
    Matrix diff = comm - expected;
    CHECK(diff.cwiseAbs().maxCoeff() <= 2 * n * std::numeric_limits<double>::epsilon());
    diff.diagonal().setZero();
    CHECK(diff.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("embed places operators with identities elsewhere") {
    const TensorSpace s22 = make_space({{"a", 2}, {"b", 2}});
    Matrix sx(2, 2);
    sx << 0, 1, 1, 0;

    const auto embedded = embed(sx, s22, "a");
    CHECK((embedded.matrix - kron(sx, Matrix::Identity(2, 2))).cwiseAbs().maxCoeff() == 0.0);
    CHECK(embedded.hermitian_flag);

    const auto id = embed(Matrix::Identity(2, 2), s22, "b");
    CHECK((id.matrix - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(embed(sx, s22, "c"), std::invalid_argument);
    CHECK_THROWS_AS(embed(Matrix::Identity(3, 3), s22, "a"), std::invalid_argument);
}

TEST_CASE("embed commutes with products on the same slot") {
    const TensorSpace s = make_space({{"dipole", 3}, {"mode", 4}});
    const Matrix a = annihilator(4);
    const auto lhs = embed(a * a, s, "mode");
    const Matrix rhs = embed(a, s, "mode").matrix * embed(a, s, "mode").matrix;
    CHECK((lhs.matrix - rhs).cwiseAbs().maxCoeff() < 1e-14);

    for (unsigned seed = 0; seed < 5; ++seed) {
        const Matrix p = random_matrix(3, 100 + seed);
        const Matrix q = random_matrix(3, 200 + seed);
        const auto prod = embed(p * q, s, "dipole");
        const Matrix sep = embed(p, s, "dipole").matrix * embed(q, s, "dipole").matrix;
        CHECK((prod.matrix - sep).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("hermitian_exp basics") {
    const TensorSpace s = make_space({{"x", 2}});
    Matrix g(2, 2);
    g << 0, 0, 0, 1;
    const auto op = make_operator(s, g);

    const auto u0 = hermitian_exp(op, 0.0);
    CHECK((u0.matrix - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

    const auto upi = hermitian_exp(op, M_PI);
    CHECK(std::abs(upi.matrix(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(upi.matrix(1, 1) - std::polar(1.0, M_PI)) < 1e-14);

    Matrix nh(2, 2);
    nh << 0, 1, 0, 0;
    CHECK_THROWS_AS(hermitian_exp(make_operator(s, nh), 1.0), std::invalid_argument);
}

TEST_CASE("hermitian_exp commutes with its generator") {
    const TensorSpace s = make_space({{"x", 6}});
    const auto g = make_operator(s, random_hermitian(6, 7));
    const auto u = hermitian_exp(g, 0.37);
    const Matrix back = u.matrix * g.matrix * u.matrix.adjoint();
    CHECK((back - g.matrix).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("hermitian_exp is unitary across dims") {
    for (int n : {2, 6, 64, 257}) {
        const TensorSpace s = make_space({{"x", n}});
        const auto u = hermitian_exp(make_operator(s, random_hermitian(n, 11 + n)), 1.234);
        const double defect =
            (u.matrix.adjoint() * u.matrix - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
        CHECK(defect <= 1e-10);
    }
}

TEST_CASE("conjugate preserves spectrum and trace") {
    const TensorSpace s = make_space({{"x", 8}});
    const auto h = make_operator(s, random_hermitian(8, 3));
    const auto u = hermitian_exp(make_operator(s, random_hermitian(8, 4)), 0.91);

    const auto id = make_unitary(s, Matrix::Identity(8, 8));
    CHECK((conjugate(h, id).matrix - h.matrix).cwiseAbs().maxCoeff() == 0.0);

    const auto hc = conjugate(h, u);
    CHECK(hc.hermitian_flag);
    const Eigen::VectorXd w0 = eig::eigenvalues(h.matrix);
    const Eigen::VectorXd w1 = eig::eigenvalues(hc.matrix);
    CHECK((w0 - w1).cwiseAbs().maxCoeff() < 1e-10 * w0.cwiseAbs().maxCoeff());
    CHECK(std::abs((hc.matrix.trace() - h.matrix.trace())) < 1e-10);

    const TensorSpace other = make_space({{"y", 8}});
    const auto h_other = make_operator(other, random_hermitian(8, 5));
    CHECK_THROWS_AS(conjugate(h_other, u), std::invalid_argument);
}

TEST_CASE("make_unitary rejects non-unitary input") {
    const TensorSpace s = make_space({{"x", 3}});
    CHECK_THROWS_AS(make_unitary(s, Matrix(2.0 * Matrix::Identity(3, 3))), std::invalid_argument);
}

TEST_CASE("kron_apply_left matches materialized kron") {
    const Matrix a = random_matrix(3, 21);
    const Matrix b = random_matrix(4, 22);
    const Matrix c = random_matrix(2, 23);
    const Matrix m = random_matrix(24, 24);
    const Matrix direct = kron(kron(a, b), c) * m;
    const Matrix fast = kron_apply_left({&a, &b, &c}, m);
    CHECK((direct - fast).cwiseAbs().maxCoeff() < 1e-12);
}
