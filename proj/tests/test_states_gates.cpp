#include "qee/gates.hpp"
#include "qee/states.hpp"

#include "qee/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qee;
using test_support::kPi;
using test_support::random_env;

TEST_CASE("env_from_theta: pointer, balanced and third-angle preparations") {
    const EnvState zero = env_from_theta(0.0);
    CHECK(zero.c0() == 1.0);
    CHECK(zero.c1() == 0.0);
    CHECK(zero.d() == cplx{0.0, 0.0});

    const EnvState balanced = env_from_theta(kPi / 2.0);
    CHECK(balanced.c0() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(balanced.c1() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(balanced.d().real() == doctest::Approx(0.5).epsilon(1e-14));

    // Half-angle arithmetic: cos^2(pi/6) = 3/4, product = sqrt(3)/4.
    const EnvState third = env_from_theta(kPi / 3.0);
    CHECK(third.c0() == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(third.c1() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(third.d().real() == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-14));
}

TEST_CASE("env_from_theta states are pure with real coherence") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < 200; ++i) {
        const EnvState env = env_from_theta(angle(rng));
        CHECK(std::abs(std::norm(env.d()) - env.c0() * env.c1()) < 1e-15);
        CHECK(env.e() == 0.0);
    }
}

TEST_CASE("env_mixed diagonal states and range validation") {
    CHECK(env_mixed(1.0).c1() == 0.0);
    CHECK(env_mixed(0.5).d() == cplx{0.0, 0.0});
    const EnvState m = env_mixed(0.3);
    CHECK(m.matrix()(0, 0).real() == doctest::Approx(0.3));
    CHECK(m.matrix()(1, 1).real() == doctest::Approx(0.7));
    CHECK_THROWS_AS(env_mixed(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(env_mixed(1.1), std::invalid_argument);
}

TEST_CASE("EnvState rejects invalid occupations and coherences") {
    CHECK_THROWS_AS(EnvState(0.6, 0.6, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(EnvState(0.5, 0.5, cplx{0.6, 0.0}), std::invalid_argument);
    CHECK(EnvState(0.5, 0.5, cplx{0.0, 0.5}).e() == doctest::Approx(1.0));
    CHECK(EnvState(0.8, 0.2, 0.0).delta_c() == doctest::Approx(0.6));
}

TEST_CASE("make_joint produces the expected product matrices") {
    const JointState a = make_joint(QubitPure::zero(), EnvState(0.8, 0.2, 0.0));
    CHECK(a.rho()(0, 0).real() == doctest::Approx(0.8));
    CHECK(a.rho()(1, 1).real() == doctest::Approx(0.2));
    CHECK(std::abs(a.rho()(2, 2)) == 0.0);
    CHECK(std::abs(a.rho()(3, 3)) == 0.0);

    const JointState b = make_joint(QubitPure::one(), env_mixed(0.5));
    CHECK(b.rho()(2, 2).real() == doctest::Approx(0.5));
    CHECK(b.rho()(3, 3).real() == doctest::Approx(0.5));
    CHECK(std::abs(b.rho()(0, 0)) == 0.0);

    // |+> (x) |0>_E is the rank-1 projector onto (|00> + |10>)/sqrt2.
    const JointState c = make_joint(QubitPure::plus(), env_from_theta(0.0));
    CHECK(c.rho()(0, 0).real() == doctest::Approx(0.5));
    CHECK(c.rho()(0, 2).real() == doctest::Approx(0.5));
    CHECK(c.rho()(2, 2).real() == doctest::Approx(0.5));
    const auto eig = hermitian_eigenvalues(c.rho());
    CHECK(eig.back() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("make_joint recovers its factors under partial trace") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
        const EnvState env = random_env(rng);
        const JointState s = make_joint(QubitPure::plus(), env);
        CHECK(max_abs_diff(s.reduced_env(), env.matrix()) < 1e-14);
        CHECK(max_abs_diff(s.reduced_qubit(), QubitPure::plus().matrix()) < 1e-14);
    }
}

TEST_CASE("QubitPure validates normalization") {
    CHECK_THROWS_AS(QubitPure(1.0, 1.0), std::invalid_argument);
    CHECK(QubitPure::plus().beta().real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("JointState enforces Hermiticity, trace and positivity") {
    CMatrix bad_trace = CMatrix::identity(4);
    CHECK_THROWS_AS(JointState{bad_trace}, invariant_error);

    CMatrix non_hermitian(4, 4);
    non_hermitian(0, 0) = 1.0;
    non_hermitian(0, 1) = 0.5;
    CHECK_THROWS_AS(JointState{non_hermitian}, invariant_error);

    CMatrix negative(4, 4);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS(JointState{negative}, invariant_error);
}

TEST_CASE("gate matrices are unitary") {
    for (Gate g : {Gate::cnot, Gate::hadamard_q, Gate::cz, Gate::cy, Gate::ih_e,
                   Gate::sigma_x_q, Gate::sigma_z_q}) {
        const CMatrix u = gate_matrix(g);
        CHECK(max_abs_diff(u * u.adjoint(), CMatrix::identity(4)) < 1e-12);
    }
}

TEST_CASE("gate matrices: controlled gates and involutions") {
    const CMatrix cnot = gate_matrix(Gate::cnot);
    CHECK(max_abs_diff(cnot * cnot, CMatrix::identity(4)) < 1e-15);

    const CMatrix cz = gate_matrix(Gate::cz);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(cz(i, i).real() == (i == 3 ? -1.0 : 1.0));
    }

    // The rotation onto the sigma_y eigenbasis squares to the identity.
    const CMatrix ih = gate_matrix(Gate::ih_e);
    CHECK(max_abs_diff(ih * ih, CMatrix::identity(4)) < 1e-15);
    // It also diagonalizes sigma_y: IH sigma_y IH = sigma_z.
    const CMatrix rotated = ih * kron(CMatrix::identity(2), pauli_y()) * ih;
    CHECK(max_abs_diff(rotated, kron(CMatrix::identity(2), pauli_z())) < 1e-15);
}

TEST_CASE("apply: identity, pointer branches of the controlled-X") {
    std::mt19937_64 rng(23);
    const EnvState env = random_env(rng);

    const JointState s = make_joint(QubitPure::plus(), env);
    CHECK(max_abs_diff(apply(CMatrix::identity(4), s).rho(), s.rho()) == 0.0);

    // |0> branch passes through, |1> branch conjugates E by sigma_x.
    const JointState b0 = apply(gate_matrix(Gate::cnot), make_joint(QubitPure::zero(), env));
    CHECK(max_abs_diff(b0.reduced_env(), env.matrix()) < 1e-14);
    const JointState b1 = apply(gate_matrix(Gate::cnot), make_joint(QubitPure::one(), env));
    CHECK(max_abs_diff(b1.reduced_env(), pauli_x() * env.matrix() * pauli_x()) < 1e-14);
}

TEST_CASE("apply preserves trace and Hermiticity on random states") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 100; ++i) {
        const JointState s = make_joint(QubitPure::plus(), random_env(rng));
        const JointState evolved = apply(gate_matrix(Gate::cz), s);
        CHECK(std::abs(evolved.rho().trace().real() - 1.0) < 1e-12);
        CHECK(is_hermitian(evolved.rho(), 1e-12));
    }
}

TEST_CASE("apply rejects non-unitary matrices") {
    CMatrix half = CMatrix::identity(4);
    half *= 0.5;
    const JointState s = make_joint(QubitPure::zero(), env_mixed(0.5));
    CHECK_THROWS_AS(apply(half, s), invariant_error);
}

TEST_CASE("conditional_gate_matrix reproduces the named gates") {
    CHECK(max_abs_diff(conditional_gate_matrix(ConditionalGate::cnot()), gate_matrix(Gate::cnot)) ==
          0.0);
    CHECK(max_abs_diff(conditional_gate_matrix(ConditionalGate(CMatrix::identity(2), pauli_z())),
                       gate_matrix(Gate::cz)) == 0.0);
    CHECK(max_abs_diff(
              conditional_gate_matrix(ConditionalGate(CMatrix::identity(2), CMatrix::identity(2))),
              CMatrix::identity(4)) == 0.0);

    // (sigma_z, sigma_z) acts on E alone and commutes with qubit-diagonal states.
    const CMatrix u = conditional_gate_matrix(ConditionalGate(pauli_z(), pauli_z()));
    CHECK(max_abs_diff(u, kron(CMatrix::identity(2), pauli_z())) == 0.0);

    CMatrix not_unitary(2, 2);
    not_unitary(0, 0) = 2.0;
    not_unitary(1, 1) = 1.0;
    CHECK_THROWS_AS(ConditionalGate(CMatrix::identity(2), not_unitary), invariant_error);
}
