#pragma once

// Small dense complex-matrix kernel used throughout the library.
// Problem sizes are tiny (Fock-space dimension D <= 28, superoperators
// D^2 x D^2), so everything is plain row-major storage with no BLAS.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sqcav {

using cplx = std::complex<double>;

class CMat {
public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMat identity(std::size_t n) {
        CMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    // Row-major flat view; for a density matrix this is exactly the
    // vectorization convention used by the superoperators.
    std::vector<cplx>& flat() { return a_; }
    const std::vector<cplx>& flat() const { return a_; }

    CMat adjoint() const {
        CMat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    CMat transpose() const {
        CMat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    CMat& operator+=(const CMat& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    CMat& operator-=(const CMat& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    CMat& operator*=(cplx s) {
        for (cplx& z : a_) z *= s;
        return *this;
    }

    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(CMat a, cplx s) { return a *= s; }
    friend CMat operator*(cplx s, CMat a) { return a *= s; }

    friend CMat operator*(const CMat& a, const CMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("CMat: dimension mismatch in product");
        CMat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx(0.0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

private:
    void check_same_shape(const CMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("CMat: shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

inline CMat kron(const CMat& a, const CMat& b) {
    CMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

// y = A x with explicit real/imaginary arithmetic; this is the hot loop of
// the time propagation and must not fall back to library complex multiply.
inline void matvec(const CMat& a, const std::vector<cplx>& x, std::vector<cplx>& y) {
    const std::size_t n = a.rows(), m = a.cols();
    if (x.size() != m) throw std::invalid_argument("matvec: dimension mismatch");
    y.resize(n);
    const cplx* p = a.flat().data();
    for (std::size_t i = 0; i < n; ++i) {
        double re = 0.0, im = 0.0;
        const cplx* row = p + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            const double ar = row[j].real(), ai = row[j].imag();
            const double xr = x[j].real(), xi = x[j].imag();
            re += ar * xr - ai * xi;
            im += ar * xi + ai * xr;
        }
        y[i] = cplx(re, im);
    }
}

// Solve A x = b by Gaussian elimination with partial pivoting. Throws if a
// pivot collapses relative to the matrix scale (rank-deficient system).
inline std::vector<cplx> lu_solve(CMat a, std::vector<cplx> b,
                                  double pivot_rel_tol = 1e-13) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("lu_solve: dimension mismatch");
    const double scale = std::max(a.max_abs(), 1e-300);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (best < pivot_rel_tol * scale)
            throw std::runtime_error("lu_solve: rank-deficient system");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            std::swap(b[col], b[piv]);
        }
        const cplx inv_p = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx f = a(r, col) * inv_p;
            if (f == cplx(0.0)) continue;
            a(r, col) = 0.0;
            for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    std::vector<cplx> x(n);
    for (std::size_t i = n; i-- > 0;) {
        cplx s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

// All eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
// Convergence criterion: off-diagonal Frobenius norm below `off_tol`.
// The input is symmetrized; callers validate Hermiticity beforehand.
inline std::vector<double> jacobi_eigenvalues(CMat a, double off_tol = 1e-12,
                                              int max_sweeps = 100) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("jacobi_eigenvalues: matrix not square");
    // enforce exact Hermiticity of the working copy
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = cplx(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }
    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < max_sweeps && off_norm() >= off_tol; ++sweep) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                // phase that makes the (p,q) element real, then a real rotation
                const cplx phi = apq / r;
                const double zeta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // column update: A <- A J, J = [[c, s],[-conj(phi) s, conj(phi) c]]
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(phi) * s * aiq;
                    a(i, q) = s * aip + std::conj(phi) * c * aiq;
                }
                // row update: A <- J^dag A
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - phi * s * aqj;
                    a(q, j) = s * apj + phi * c * aqj;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace sqcav
