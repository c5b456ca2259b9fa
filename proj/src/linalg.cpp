#include "pregroup/linalg.hpp"

#include <cmath>

namespace pregroup {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

std::vector<double> apply(const Matrix& m, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != m.cols)
        throw Error("matrix-vector dimension mismatch");
    std::vector<double> out(static_cast<std::size_t>(m.rows), 0.0);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            out[static_cast<std::size_t>(r)] += m.at(r, c) * x[static_cast<std::size_t>(c)];
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw Error("matrix-matrix dimension mismatch");
    Matrix out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int k = 0; k < a.cols; ++k) {
            const double arv = a.at(r, k);
            if (arv == 0.0) continue;
            for (int c = 0; c < b.cols; ++c) out.at(r, c) += arv * b.at(k, c);
        }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
    return out;
}

void jacobi_eigen_symmetric(const Matrix& m, std::vector<double>& eigenvalues,
                            Matrix& eigenvectors) {
    if (m.rows != m.cols) throw Error("eigendecomposition needs a square matrix");
    const int n = m.rows;
    Matrix a = m;
    eigenvectors = Matrix::identity(n);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a.at(p, q)) < 1e-300) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * a.at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = eigenvectors.at(k, p), vkq = eigenvectors.at(k, q);
                    eigenvectors.at(k, p) = c * vkp - s * vkq;
                    eigenvectors.at(k, q) = s * vkp + c * vkq;
                }
            }
    }
    eigenvalues.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) eigenvalues[static_cast<std::size_t>(i)] = a.at(i, i);
}

Matrix pseudo_inverse_spd(const Matrix& m) {
    std::vector<double> vals;
    Matrix vecs;
    jacobi_eigen_symmetric(m, vals, vecs);
    double max_val = 0.0;
    for (double v : vals) max_val = std::max(max_val, std::fabs(v));
    const double tol = max_val * m.rows * 1e-13;
    Matrix inv_diag(m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i) {
        const double v = vals[static_cast<std::size_t>(i)];
        inv_diag.at(i, i) = std::fabs(v) > tol ? 1.0 / v : 0.0;
    }
    return multiply(multiply(vecs, inv_diag), transpose(vecs));
}

}  // namespace pregroup
