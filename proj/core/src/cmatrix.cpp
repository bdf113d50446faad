#include "qee/cmatrix.hpp"

#include "qee/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qee {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("CMatrix: dimensions must be positive");
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : CMatrix(rows.size(), rows.begin()->size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("CMatrix: ragged initializer");
        }
        std::size_t c = 0;
        for (const cplx& v : row) {
            (*this)(r, c++) = v;
        }
        ++r;
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

cplx CMatrix::trace() const {
    if (!is_square()) {
        throw std::invalid_argument("trace: non-square matrix");
    }
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("CMatrix: dimension mismatch in +");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("CMatrix: dimension mismatch in -");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

CMatrix& CMatrix::operator*=(cplx scalar) {
    for (auto& v : data_) {
        v *= scalar;
    }
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("CMatrix: dimension mismatch in *");
    }
    CMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
        }
    }
    return m;
}

bool is_hermitian(const CMatrix& m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_unitary(const CMatrix& m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    return max_abs_diff(m * m.adjoint(), CMatrix::identity(m.rows())) <= tol;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const cplx f = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
                }
            }
        }
    }
    return out;
}

namespace {

void require_4x4(const CMatrix& rho, const char* who) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw std::invalid_argument(std::string(who) + ": expected a 4x4 matrix");
    }
}

} // namespace

CMatrix partial_trace(const CMatrix& rho, Subsystem traced_out) {
    require_4x4(rho, "partial_trace");
    CMatrix out(2, 2);
    if (traced_out == Subsystem::environment) {
        for (std::size_t q = 0; q < 2; ++q) {
            for (std::size_t qp = 0; qp < 2; ++qp) {
                out(q, qp) = rho(2 * q + 0, 2 * qp + 0) + rho(2 * q + 1, 2 * qp + 1);
            }
        }
    } else {
        for (std::size_t e = 0; e < 2; ++e) {
            for (std::size_t ep = 0; ep < 2; ++ep) {
                out(e, ep) = rho(0 + e, 0 + ep) + rho(2 + e, 2 + ep);
            }
        }
    }
    return out;
}

CMatrix partial_transpose(const CMatrix& rho, Subsystem transposed) {
    require_4x4(rho, "partial_transpose");
    CMatrix out(4, 4);
    for (std::size_t q = 0; q < 2; ++q) {
        for (std::size_t e = 0; e < 2; ++e) {
            for (std::size_t qp = 0; qp < 2; ++qp) {
                for (std::size_t ep = 0; ep < 2; ++ep) {
                    if (transposed == Subsystem::environment) {
                        out(2 * q + e, 2 * qp + ep) = rho(2 * q + ep, 2 * qp + e);
                    } else {
                        out(2 * q + e, 2 * qp + ep) = rho(2 * qp + e, 2 * q + ep);
                    }
                }
            }
        }
    }
    return out;
}

namespace {

// Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps.
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += a[p][q] * a[p][q];
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = a[i][i];
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
    if (!m.is_square()) {
        throw std::invalid_argument("hermitian_eigenvalues: non-square matrix");
    }
    if (!is_hermitian(m, 1e-10)) {
        throw invariant_error("hermitian_eigenvalues: input is not Hermitian within 1e-10");
    }
    const std::size_t n = m.rows();
    if (n == 1) {
        return {m(0, 0).real()};
    }
    if (n == 2) {
        const double a = m(0, 0).real();
        const double d = m(1, 1).real();
        const double mean = 0.5 * (a + d);
        const double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
        return {mean - r, mean + r};
    }
    // A = X + iY Hermitian  =>  [X -Y; Y X] is symmetric with each
    // eigenvalue of A appearing twice.
    std::vector<std::vector<double>> s(2 * n, std::vector<double>(2 * n, 0.0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const cplx v = 0.5 * (m(r, c) + std::conj(m(c, r)));
            s[r][c] = v.real();
            s[n + r][n + c] = v.real();
            s[r][n + c] = -v.imag();
            s[n + r][c] = v.imag();
        }
    }
    const std::vector<double> doubled = jacobi_symmetric_eigenvalues(std::move(s));
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return eig;
}

double trace_norm_half_distance(const CMatrix& a, const CMatrix& b) {
    if (!a.is_square() || !b.is_square()) {
        throw std::invalid_argument("trace_norm_half_distance: non-square input");
    }
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("trace_norm_half_distance: dimension mismatch");
    }
    const CMatrix delta = a - b;
    const CMatrix gram = delta.adjoint() * delta;
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(gram)) {
        sum += std::sqrt(std::max(lambda, 0.0));
    }
    return 0.5 * sum;
}

} // namespace qee
