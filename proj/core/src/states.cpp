#include "qee/states.hpp"

#include "qee/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace qee {

EnvState::EnvState(double c0, double c1, cplx d) : c0_(c0), c1_(c1), d_(d) {
    if (c0 < -1e-12 || c1 < -1e-12) {
        throw std::invalid_argument("EnvState: negative occupation");
    }
    if (std::abs(c0 + c1 - 1.0) > 1e-12) {
        throw std::invalid_argument("EnvState: occupations must sum to 1");
    }
    if (std::norm(d) > c0 * c1 + 1e-12) {
        throw std::invalid_argument("EnvState: |d|^2 <= c0*c1 violated");
    }
}

CMatrix EnvState::matrix() const {
    return CMatrix{{c0_, d_}, {std::conj(d_), c1_}};
}

EnvState env_from_theta(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("env_from_theta: theta must be finite");
    }
    const double ch = std::cos(0.5 * theta);
    const double sh = std::sin(0.5 * theta);
    return EnvState(ch * ch, sh * sh, cplx{ch * sh, 0.0});
}

EnvState env_mixed(double c0) {
    if (!(c0 >= 0.0 && c0 <= 1.0)) {
        throw std::invalid_argument("env_mixed: c0 must lie in [0, 1]");
    }
    return EnvState(c0, 1.0 - c0, cplx{0.0, 0.0});
}

QubitPure::QubitPure(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12) {
        throw std::invalid_argument("QubitPure: state is not normalized");
    }
}

QubitPure QubitPure::plus() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s};
}

QubitPure QubitPure::minus() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, -s};
}

CMatrix QubitPure::matrix() const {
    CMatrix m(2, 2);
    m(0, 0) = alpha_ * std::conj(alpha_);
    m(0, 1) = alpha_ * std::conj(beta_);
    m(1, 0) = beta_ * std::conj(alpha_);
    m(1, 1) = beta_ * std::conj(beta_);
    return m;
}

JointState::JointState(CMatrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() != 4 || rho_.cols() != 4) {
        throw std::invalid_argument("JointState: expected a 4x4 matrix");
    }
    if (!is_hermitian(rho_, 1e-10)) {
        throw invariant_error("JointState: matrix is not Hermitian within 1e-10");
    }
    if (std::abs(rho_.trace().real() - 1.0) > 1e-10 || std::abs(rho_.trace().imag()) > 1e-10) {
        throw invariant_error("JointState: trace differs from 1 beyond 1e-10");
    }
    if (hermitian_eigenvalues(rho_).front() < -1e-9) {
        throw invariant_error("JointState: matrix has an eigenvalue below -1e-9");
    }
}

JointState make_joint(const QubitPure& q, const EnvState& env) {
    return JointState(kron(q.matrix(), env.matrix()));
}

ConditionalGate::ConditionalGate(CMatrix w0, CMatrix w1) : w0_(std::move(w0)), w1_(std::move(w1)) {
    if (w0_.rows() != 2 || w0_.cols() != 2 || w1_.rows() != 2 || w1_.cols() != 2) {
        throw std::invalid_argument("ConditionalGate: conditional operators must be 2x2");
    }
    if (!is_unitary(w0_, 1e-10) || !is_unitary(w1_, 1e-10)) {
        throw invariant_error("ConditionalGate: conditional operators must be unitary");
    }
}

ConditionalGate ConditionalGate::cnot() {
    return {CMatrix::identity(2), CMatrix{{0.0, 1.0}, {1.0, 0.0}}};
}

} // namespace qee
