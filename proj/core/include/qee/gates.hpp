#pragma once

#include "qee/cmatrix.hpp"
#include "qee/states.hpp"

namespace qee {

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
CMatrix hadamard2();

/// Gates of the detection protocol, all returned as 4x4 unitaries on the
/// joint system (single-subsystem operations are lifted with an identity on
/// the other factor).
enum class Gate {
    cnot,       // qubit-controlled sigma_x on E
    hadamard_q, // Hadamard on the qubit factor
    cz,         // qubit-controlled sigma_z on E
    cy,         // qubit-controlled sigma_y on E
    ih_e,       // rotation taking the sigma_y eigenbasis of E to the computational basis
    sigma_x_q,
    sigma_z_q,
};

CMatrix gate_matrix(Gate g);

/// U rho U^dag. Throws invariant_error if u is not unitary within 1e-10.
JointState apply(const CMatrix& u, const JointState& s);

/// Block-diagonal 4x4 matrix [w0 0; 0 w1] of a conditional gate.
CMatrix conditional_gate_matrix(const ConditionalGate& g);

} // namespace qee
