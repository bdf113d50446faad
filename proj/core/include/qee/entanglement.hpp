#pragma once

#include "qee/cmatrix.hpp"
#include "qee/states.hpp"

namespace qee {

/// Environment states conditioned on the qubit pointer states after a
/// conditional gate: r_ii = w_i R w_i^dag. Both entries are validated
/// density matrices.
struct ConditionalPair {
    CMatrix r00;
    CMatrix r11;
};

ConditionalPair conditional_pair(const EnvState& env, const ConditionalGate& g);

/// Trace-norm distance between the two conditional environment states of
/// the controlled-X interaction; this quantifies the entanglement the
/// interaction can generate from `env`.
double entanglement_trace_norm(const EnvState& env);

/// True iff the conditional pair differs anywhere by more than 1e-10.
/// Equality of the pair is exactly the separability condition for states
/// produced by a conditional gate from a pure qubit.
bool is_entangling(const EnvState& env, const ConditionalGate& g);

/// Negativity of the joint state obtained by evolving |q><q| (x) R under
/// the conditional gate: sum of |negative eigenvalues| of the partial
/// transpose. Exact entanglement criterion for two qubits, used to
/// cross-check the witness verdicts.
double negativity_oracle(const QubitPure& q, const EnvState& env, const ConditionalGate& g);

} // namespace qee
