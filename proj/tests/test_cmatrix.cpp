#include "qee/cmatrix.hpp"

#include "qee/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qee;
using test_support::random_2x2;
using test_support::random_density;
using test_support::random_hermitian_2x2;

namespace {

CMatrix bell_phi_plus() {
    CMatrix rho(4, 4);
    rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
    return rho;
}

} // namespace

TEST_CASE("kron identity and projector blocks") {
    const CMatrix id2 = CMatrix::identity(2);
    CHECK(max_abs_diff(kron(id2, id2), CMatrix::identity(4)) == 0.0);

    CMatrix p0(2, 2);
    p0(0, 0) = 1.0;
    const CMatrix m{{cplx{1, 2}, cplx{3, 0}}, {cplx{0, -1}, cplx{4, 4}}};
    const CMatrix block = kron(p0, m);
    CHECK(block(0, 0) == m(0, 0));
    CHECK(block(1, 1) == m(1, 1));
    CHECK(block(2, 2) == cplx{0.0, 0.0});
    CHECK(block(3, 3) == cplx{0.0, 0.0});
    CHECK(block(2, 3) == cplx{0.0, 0.0});
}

TEST_CASE("kron of sigma_x with itself is an involution") {
    const CMatrix sx{{0.0, 1.0}, {1.0, 0.0}};
    const CMatrix xx = kron(sx, sx);
    CHECK(max_abs_diff(xx * xx, CMatrix::identity(4)) < 1e-15);
}

TEST_CASE("kron is associative on random inputs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const CMatrix a = random_2x2(rng);
        const CMatrix b = random_2x2(rng);
        const CMatrix c = random_2x2(rng);
        CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
    }
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
    const CMatrix reduced = partial_trace(bell_phi_plus(), Subsystem::environment);
    CMatrix expected = CMatrix::identity(2);
    expected *= 0.5;
    CHECK(max_abs_diff(reduced, expected) < 1e-15);
}

TEST_CASE("partial trace of a product recovers the factors") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i) {
        const CMatrix a = random_2x2(rng);
        const CMatrix b = random_2x2(rng);
        const CMatrix ab = kron(a, b);
        CMatrix a_scaled = a;
        a_scaled *= b.trace();
        CHECK(max_abs_diff(partial_trace(ab, Subsystem::environment), a_scaled) < 1e-12);
        CMatrix b_scaled = b;
        b_scaled *= a.trace();
        CHECK(max_abs_diff(partial_trace(ab, Subsystem::qubit), b_scaled) < 1e-12);
    }
}

TEST_CASE("partial trace preserves the trace and rejects bad dimensions") {
    std::mt19937_64 rng(13);
    const CMatrix rho = random_density(rng, 4);
    CHECK(std::abs((partial_trace(rho, Subsystem::qubit).trace() - rho.trace())) < 1e-14);
    CHECK_THROWS_AS(partial_trace(CMatrix::identity(2), Subsystem::qubit),
                    std::invalid_argument);
}

TEST_CASE("partial transpose: product rule, involution, Bell spectrum") {
    std::mt19937_64 rng(14);
    const CMatrix a = random_hermitian_2x2(rng);
    const CMatrix b = random_hermitian_2x2(rng);
    const auto transpose = [](const CMatrix& m) {
        CMatrix t(m.cols(), m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                t(c, r) = m(r, c);
            }
        }
        return t;
    };
    CHECK(max_abs_diff(partial_transpose(kron(a, b), Subsystem::environment),
                       kron(a, transpose(b))) < 1e-13);

    const CMatrix rho = random_density(rng, 4);
    CHECK(max_abs_diff(
              partial_transpose(partial_transpose(rho, Subsystem::qubit), Subsystem::qubit),
              rho) == 0.0);

    // Minimum eigenvalue of the partially transposed Bell state: -1/2.
    const auto eig = hermitian_eigenvalues(partial_transpose(bell_phi_plus(), Subsystem::environment));
    CHECK(eig.front() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("hermitian eigenvalues: closed-form and embedded Jacobi cases") {
    const auto diag_eig = hermitian_eigenvalues(CMatrix{{0.3, 0.0}, {0.0, 0.7}});
    CHECK(diag_eig[0] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(diag_eig[1] == doctest::Approx(0.7).epsilon(1e-14));

    const auto sx_eig = hermitian_eigenvalues(CMatrix{{0.0, 1.0}, {1.0, 0.0}});
    CHECK(sx_eig[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sx_eig[1] == doctest::Approx(1.0).epsilon(1e-14));

    CMatrix quarter = CMatrix::identity(4);
    quarter *= 0.25;
    for (double lambda : hermitian_eigenvalues(quarter)) {
        CHECK(lambda == doctest::Approx(0.25).epsilon(1e-14));
    }
}

TEST_CASE("hermitian eigenvalues agree with trace moments on random matrices") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 40; ++i) {
        CMatrix m = random_density(rng, 4);
        // random Hermitian, not necessarily positive
        m -= 0.4 * CMatrix::identity(4);
        const auto eig = hermitian_eigenvalues(m);
        CMatrix power = CMatrix::identity(4);
        for (int k = 1; k <= 4; ++k) {
            power = power * m;
            double moment = 0.0;
            for (double lambda : eig) {
                moment += std::pow(lambda, k);
            }
            CHECK(moment == doctest::Approx(power.trace().real()).epsilon(1e-11));
        }
    }
}

TEST_CASE("hermitian eigenvalues of density matrices sum to one and are nonnegative") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 40; ++i) {
        const auto eig = hermitian_eigenvalues(random_density(rng, 4));
        double sum = 0.0;
        for (double lambda : eig) {
            CHECK(lambda >= -1e-10);
            sum += lambda;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("hermitian eigenvalues reject non-Hermitian input") {
    CMatrix m(2, 2);
    m(0, 1) = cplx{1.0, 0.0};
    CHECK_THROWS_AS(hermitian_eigenvalues(m), invariant_error);
}

TEST_CASE("trace norm half distance: analytic values") {
    const CMatrix a{{0.7, 0.0}, {0.0, 0.3}};
    CHECK(trace_norm_half_distance(a, a) == 0.0);

    const CMatrix b{{0.3, 0.0}, {0.0, 0.7}};
    CHECK(trace_norm_half_distance(a, b) == doctest::Approx(0.4).epsilon(1e-13));

    // Coherence-only difference of maximal imaginary coherence.
    const CMatrix r{{0.5, cplx{0.0, 0.5}}, {cplx{0.0, -0.5}, 0.5}};
    const CMatrix sx{{0.0, 1.0}, {1.0, 0.0}};
    CHECK(trace_norm_half_distance(r, sx * r * sx) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("trace norm half distance: symmetry and triangle inequality") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        const CMatrix a = random_hermitian_2x2(rng);
        const CMatrix b = random_hermitian_2x2(rng);
        const CMatrix c = random_hermitian_2x2(rng);
        const double ab = trace_norm_half_distance(a, b);
        const double ba = trace_norm_half_distance(b, a);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
        CHECK(trace_norm_half_distance(a, c) <= ab + trace_norm_half_distance(b, c) + 1e-12);
    }
    CHECK_THROWS_AS(trace_norm_half_distance(CMatrix(2, 3), CMatrix(2, 3)),
                    std::invalid_argument);
}
