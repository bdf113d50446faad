#include "qee/entanglement.hpp"

#include "qee/errors.hpp"
#include "qee/gates.hpp"

#include <cmath>

namespace qee {

namespace {

void require_density_matrix(const CMatrix& m, const char* who) {
    if (!is_hermitian(m, 1e-10)) {
        throw invariant_error(std::string(who) + ": not Hermitian");
    }
    if (std::abs(m.trace().real() - 1.0) > 1e-10) {
        throw invariant_error(std::string(who) + ": trace differs from 1");
    }
    if (hermitian_eigenvalues(m).front() < -1e-10) {
        throw invariant_error(std::string(who) + ": negative eigenvalue");
    }
}

} // namespace

ConditionalPair conditional_pair(const EnvState& env, const ConditionalGate& g) {
    const CMatrix r = env.matrix();
    ConditionalPair pair{g.w0() * r * g.w0().adjoint(), g.w1() * r * g.w1().adjoint()};
    require_density_matrix(pair.r00, "conditional_pair r00");
    require_density_matrix(pair.r11, "conditional_pair r11");
    return pair;
}

double entanglement_trace_norm(const EnvState& env) {
    const ConditionalPair pair = conditional_pair(env, ConditionalGate::cnot());
    return trace_norm_half_distance(pair.r00, pair.r11);
}

bool is_entangling(const EnvState& env, const ConditionalGate& g) {
    const ConditionalPair pair = conditional_pair(env, g);
    return max_abs_diff(pair.r00, pair.r11) > 1e-10;
}

double negativity_oracle(const QubitPure& q, const EnvState& env, const ConditionalGate& g) {
    const JointState evolved = apply(conditional_gate_matrix(g), make_joint(q, env));
    const CMatrix pt = partial_transpose(evolved.rho(), Subsystem::environment);
    double negativity = 0.0;
    for (double lambda : hermitian_eigenvalues(pt)) {
        if (lambda < 0.0) {
            negativity -= lambda;
        }
    }
    return negativity;
}

} // namespace qee
