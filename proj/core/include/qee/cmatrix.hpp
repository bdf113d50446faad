#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qee {

using cplx = std::complex<double>;

/// Dense complex matrix in row-major order. Everything in this project is
/// 2x2 or 4x4, so no attempt is made at sparsity or blocking; values are
/// immutable in spirit (operations return new matrices) and cheap to copy.
class CMatrix {
  public:
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix zero(std::size_t n) { return CMatrix(n, n); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    CMatrix adjoint() const;
    cplx trace() const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(cplx scalar);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(cplx s, CMatrix m) { return m *= s; }
    friend CMatrix operator*(CMatrix m, cplx s) { return m *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  private:
    std::size_t rows_, cols_;
    std::vector<cplx> data_;
};

/// Largest |a_ij - b_ij| over all entries.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

bool is_hermitian(const CMatrix& m, double tol = 1e-10);
bool is_unitary(const CMatrix& m, double tol = 1e-10);

/// Which tensor factor of a qubit (x) environment operator an operation
/// refers to. Basis ordering is |00>,|01>,|10>,|11> with the qubit as the
/// slow index throughout the project.
enum class Subsystem { qubit, environment };

/// Kronecker product, (a.rows*b.rows) x (a.cols*b.cols).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Trace out `traced_out` from a 4x4 qubit (x) environment operator.
/// Returns the reduced 2x2 matrix of the remaining subsystem.
CMatrix partial_trace(const CMatrix& rho, Subsystem traced_out);

/// Transpose the indices of one subsystem of a 4x4 operator.
CMatrix partial_transpose(const CMatrix& rho, Subsystem transposed);

/// Real eigenvalues of a Hermitian matrix, ascending. The 2x2 case is the
/// closed-form quadratic; larger matrices go through a cyclic Jacobi
/// iteration on the real symmetric embedding [X -Y; Y X]. Inputs more than
/// 1e-10 away from Hermitian throw invariant_error.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

/// Half the sum of singular values of (a - b), computed as square roots of
/// the eigenvalues of (a-b)^dag (a-b). Zero iff a = b.
double trace_norm_half_distance(const CMatrix& a, const CMatrix& b);

} // namespace qee
