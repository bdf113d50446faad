#pragma once

#include "qee/cmatrix.hpp"

namespace qee {

/// Environment qubit density matrix [[c0, d], [conj(d), c1]] with c0+c1 = 1
/// and |d|^2 <= c0*c1. delta_c() and e() are the two combinations the
/// witness protocol is sensitive to.
class EnvState {
  public:
    EnvState(double c0, double c1, cplx d);

    double c0() const { return c0_; }
    double c1() const { return c1_; }
    cplx d() const { return d_; }

    double delta_c() const { return c0_ - c1_; }
    double e() const { return 2.0 * d_.imag(); }

    CMatrix matrix() const;

  private:
    double c0_, c1_;
    cplx d_;
};

/// Pure environment state cos(theta/2)|0> + sin(theta/2)|1> as a density
/// matrix: c0 = cos^2(theta/2), c1 = sin^2(theta/2), d = cos(theta/2)sin(theta/2).
EnvState env_from_theta(double theta);

/// Diagonal mixture c0|0><0| + (1-c0)|1><1|. Throws std::invalid_argument
/// for c0 outside [0, 1].
EnvState env_mixed(double c0);

/// Pure qubit state alpha|0> + beta|1>, normalized within 1e-12.
class QubitPure {
  public:
    QubitPure(cplx alpha, cplx beta);

    static QubitPure zero() { return {1.0, 0.0}; }
    static QubitPure one() { return {0.0, 1.0}; }
    static QubitPure plus();
    static QubitPure minus();

    cplx alpha() const { return alpha_; }
    cplx beta() const { return beta_; }

    CMatrix matrix() const;

  private:
    cplx alpha_, beta_;
};

/// 4x4 qubit (x) environment density matrix, qubit index slow. Construction
/// enforces Hermiticity (1e-10), unit trace (1e-10) and eigenvalues >= -1e-9.
class JointState {
  public:
    explicit JointState(CMatrix rho);

    const CMatrix& rho() const { return rho_; }

    CMatrix reduced_qubit() const { return partial_trace(rho_, Subsystem::environment); }
    CMatrix reduced_env() const { return partial_trace(rho_, Subsystem::qubit); }

  private:
    CMatrix rho_;
};

/// Product state |psi><psi| (x) R_E.
JointState make_joint(const QubitPure& q, const EnvState& env);

/// Pair of conditional environment unitaries defining a qubit-controlled
/// gate |0><0| (x) w0 + |1><1| (x) w1.
class ConditionalGate {
  public:
    ConditionalGate(CMatrix w0, CMatrix w1);

    const CMatrix& w0() const { return w0_; }
    const CMatrix& w1() const { return w1_; }

    static ConditionalGate cnot();

  private:
    CMatrix w0_, w1_;
};

} // namespace qee
