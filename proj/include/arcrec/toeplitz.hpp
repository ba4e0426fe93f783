#pragma once

#include <cstddef>
#include <vector>

#include "arcrec/polynomial.hpp"

namespace arcrec {

// Dense complex matrix, row-major.  Sized for the (n+1) x (n+1) operators
// this library works with; not a general linear-algebra type.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Complex& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Complex> data_;
};

// Lower-triangular Toeplitz operator on polynomials of degree <= n,
// determined by its first column: M[j][k] = col[j-k] for j >= k.
// This is the matrix of the compression of multiplication by an analytic
// symbol whose Taylor coefficients are the column.
struct LowerToeplitz {
    std::vector<Complex> col;  // size n+1

    int n() const { return static_cast<int>(col.size()) - 1; }
};

LowerToeplitz from_first_column(std::vector<Complex> t);

// Dense matrix of the operator.
ComplexMatrix to_matrix(const LowerToeplitz& m);

// (Mq)[j] = sum_{k<=j} col[j-k] q[k]; q is padded with zeros up to degree n.
// Throws DegreeMismatch if q has effective degree above n.
Polynomial apply(const LowerToeplitz& m, const Polynomial& q);

// Full eigensystem of a Hermitian matrix by cyclic Jacobi rotations, run to
// off-diagonal Frobenius residual below 1e-13 (relative to the matrix
// scale).  Eigenvalues ascending; vectors[i] is a unit eigenvector for
// values[i], and the vectors are orthonormal.  Throws NoConvergence after
// 100 sweeps.
struct HermitianEigenSystem {
    std::vector<double> values;
    std::vector<std::vector<Complex>> vectors;
};
HermitianEigenSystem jacobi_eigensystem(ComplexMatrix a);

// Hermitian square M*M of the operator.
ComplexMatrix gram_matrix(const LowerToeplitz& m);

// Largest singular value, via the Jacobi eigensystem of M*M.
double operator_norm(const LowerToeplitz& m);

// Unit-norm vector q of minimal effective degree in the span of the
// eigenvectors of M*M with eigenvalue within tol_eig of 1, found by
// eliminating highest-index coefficients first with magnitude pivoting.
// The leading coefficient of the result is positive real.  Requires the
// operator norm to be near 1; throws EmptyEigenspace when no eigenvalue
// falls in the window.
Polynomial norm_preserving_min_degree_vector(const LowerToeplitz& m,
                                             double tol_eig = 1e-8);

}  // namespace arcrec
