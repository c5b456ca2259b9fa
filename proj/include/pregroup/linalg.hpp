#pragma once

#include <vector>

#include "pregroup/error.hpp"

namespace pregroup {

// Dense row-major matrix, sized for desk-scale linear algebra.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0.0) {}

    double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }

    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<double>& d);
};

std::vector<double> apply(const Matrix& m, const std::vector<double>& x);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// Returns eigenvalues and the orthogonal matrix of column eigenvectors.
void jacobi_eigen_symmetric(const Matrix& m, std::vector<double>& eigenvalues,
                            Matrix& eigenvectors);

// Moore-Penrose pseudo-inverse of a symmetric positive-semidefinite matrix,
// via the eigendecomposition with small eigenvalues treated as zero.
Matrix pseudo_inverse_spd(const Matrix& m);

}  // namespace pregroup
