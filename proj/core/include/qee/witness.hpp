#pragma once

#include "qee/cmatrix.hpp"
#include "qee/states.hpp"

namespace qee {

/// Which controlled gate closes the detection sequence. The CZ variant is
/// sensitive to the occupation difference c0-c1, the CY variant to the
/// imaginary part of the environment coherence.
enum class SecondStep { cz, cy };

/// Per-branch sigma_x expectations and their average. w is defined as
/// (sx0 + sx1) / 2 and is stored exactly as computed.
struct WitnessResult {
    double sx0;
    double sx1;
    double w;
};

/// Joint state after the full gate sequence (controlled-X on E, Hadamard on
/// the qubit, then the chosen controlled gate), starting from the qubit
/// pointer state |i> and the given environment. i must be 0 or 1.
JointState run_branch(int i, const EnvState& env, SecondStep step2);

/// Off-diagonal element (0,1) of the reduced qubit density matrix.
cplx qubit_coherence(const JointState& s);

/// Runs both pointer-state branches through the full density-matrix
/// evolution and measures sigma_x on the qubit. The closed forms (c0-c1 for
/// CZ, -2 Im d for CY) are deliberately not used here; they belong to the
/// tests as oracles. The protocol guarantees real coherences, which is
/// enforced at 1e-10.
WitnessResult witness(const EnvState& env, SecondStep step2);

/// Witness of the pure-state family cos(theta/2)|0> + sin(theta/2)|1> under
/// the CZ protocol.
double witness_pure_theta(double theta);

/// Reduced qubit density matrix after either branch of the pure-theta
/// protocol; its off-diagonal is cos(theta)/2.
CMatrix pure_theta_output_qubit(double theta);

/// Witness of the mixed family c0|0><0| + (1-c0)|1><1| under the CZ
/// protocol. Throws std::invalid_argument for c0 outside [0, 1].
double witness_mixed_c0(double c0);

/// sigma_x expectation of branch i when the final controlled-Z is replaced
/// by its measurement-plus-feedback equivalent: measure E in the
/// computational basis and apply sigma_z to the qubit on outcome 1. Both
/// measurement outcomes are enumerated with their probabilities; nothing is
/// sampled.
double feed_forward_cz(int i, const EnvState& env);

/// Same for the controlled-Y variant: E is first rotated from the sigma_y
/// eigenbasis to the computational basis, measured, and the qubit receives
/// a sigma_z correction on outcome 1.
double feed_forward_cy(int i, const EnvState& env);

} // namespace qee
