#include "qee/gates.hpp"

#include "qee/errors.hpp"

#include <cmath>

namespace qee {

namespace {
const cplx kI{0.0, 1.0};
}

CMatrix pauli_x() {
    return CMatrix{{0.0, 1.0}, {1.0, 0.0}};
}

CMatrix pauli_y() {
    return CMatrix{{0.0, -kI}, {kI, 0.0}};
}

CMatrix pauli_z() {
    return CMatrix{{1.0, 0.0}, {0.0, -1.0}};
}

CMatrix hadamard2() {
    const double s = 1.0 / std::sqrt(2.0);
    return CMatrix{{s, s}, {s, -s}};
}

CMatrix gate_matrix(Gate g) {
    const CMatrix id2 = CMatrix::identity(2);
    switch (g) {
    case Gate::cnot:
        return conditional_gate_matrix(ConditionalGate::cnot());
    case Gate::hadamard_q:
        return kron(hadamard2(), id2);
    case Gate::cz:
        return conditional_gate_matrix(ConditionalGate(id2, pauli_z()));
    case Gate::cy:
        return conditional_gate_matrix(ConditionalGate(id2, pauli_y()));
    case Gate::ih_e: {
        const double s = 1.0 / std::sqrt(2.0);
        const CMatrix ih{{s, -s * kI}, {s * kI, -s}};
        return kron(id2, ih);
    }
    case Gate::sigma_x_q:
        return kron(pauli_x(), id2);
    case Gate::sigma_z_q:
        return kron(pauli_z(), id2);
    }
    throw std::invalid_argument("gate_matrix: unknown gate");
}

JointState apply(const CMatrix& u, const JointState& s) {
    if (u.rows() != 4 || u.cols() != 4) {
        throw std::invalid_argument("apply: expected a 4x4 unitary");
    }
    if (!is_unitary(u, 1e-10)) {
        throw invariant_error("apply: matrix is not unitary within 1e-10");
    }
    return JointState(u * s.rho() * u.adjoint());
}

CMatrix conditional_gate_matrix(const ConditionalGate& g) {
    CMatrix u(4, 4);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            u(r, c) = g.w0()(r, c);
            u(2 + r, 2 + c) = g.w1()(r, c);
        }
    }
    return u;
}

} // namespace qee
