#include "qee/witness.hpp"

#include "qee/errors.hpp"
#include "qee/gates.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qee {

namespace {

QubitPure pointer_state(int i) {
    if (i == 0) {
        return QubitPure::zero();
    }
    if (i == 1) {
        return QubitPure::one();
    }
    throw std::invalid_argument("branch index must be 0 or 1");
}

double real_checked(cplx value, const char* what) {
    if (std::abs(value.imag()) > 1e-10) {
        throw invariant_error(std::string(what) + ": expected a real value");
    }
    return value.real();
}

// sigma_x expectation as 2 Re(rho_01), with the protocol's realness
// guarantee enforced.
double sigma_x_expectation(const CMatrix& qubit_rho) {
    return 2.0 * real_checked(qubit_rho(0, 1), "sigma_x expectation");
}

// State after the decoherence step and the qubit rotation, before the
// final controlled gate.
JointState pre_step2_state(int i, const EnvState& env) {
    JointState s = make_joint(pointer_state(i), env);
    s = apply(gate_matrix(Gate::cnot), s);
    return apply(gate_matrix(Gate::hadamard_q), s);
}

// Unnormalized reduced qubit states conditioned on a computational-basis
// measurement of E; entry b carries weight p(b) in its trace.
std::array<CMatrix, 2> measure_env(const JointState& s) {
    std::array<CMatrix, 2> out{CMatrix(2, 2), CMatrix(2, 2)};
    for (std::size_t b = 0; b < 2; ++b) {
        CMatrix projector(2, 2);
        projector(b, b) = 1.0;
        out[b] = partial_trace(kron(CMatrix::identity(2), projector) * s.rho() *
                                   kron(CMatrix::identity(2), projector),
                               Subsystem::environment);
    }
    return out;
}

double feed_forward_sigma_x(const JointState& pre_measurement) {
    const auto conditionals = measure_env(pre_measurement);
    const CMatrix sx = pauli_x();
    const CMatrix sz = pauli_z();
    cplx expectation = (sx * conditionals[0]).trace();
    expectation += (sx * (sz * conditionals[1] * sz)).trace();
    return real_checked(expectation, "feed-forward sigma_x expectation");
}

} // namespace

JointState run_branch(int i, const EnvState& env, SecondStep step2) {
    return apply(gate_matrix(step2 == SecondStep::cz ? Gate::cz : Gate::cy),
                 pre_step2_state(i, env));
}

cplx qubit_coherence(const JointState& s) {
    return s.reduced_qubit()(0, 1);
}

WitnessResult witness(const EnvState& env, SecondStep step2) {
    WitnessResult r{};
    r.sx0 = sigma_x_expectation(run_branch(0, env, step2).reduced_qubit());
    r.sx1 = sigma_x_expectation(run_branch(1, env, step2).reduced_qubit());
    r.w = 0.5 * (r.sx0 + r.sx1);
    return r;
}

double witness_pure_theta(double theta) {
    return witness(env_from_theta(theta), SecondStep::cz).w;
}

CMatrix pure_theta_output_qubit(double theta) {
    return run_branch(0, env_from_theta(theta), SecondStep::cz).reduced_qubit();
}

double witness_mixed_c0(double c0) {
    return witness(env_mixed(c0), SecondStep::cz).w;
}

double feed_forward_cz(int i, const EnvState& env) {
    return feed_forward_sigma_x(pre_step2_state(i, env));
}

double feed_forward_cy(int i, const EnvState& env) {
    return feed_forward_sigma_x(apply(gate_matrix(Gate::ih_e), pre_step2_state(i, env)));
}

} // namespace qee
