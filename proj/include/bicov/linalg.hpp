#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bicov {

using cplx = std::complex<double>;

/// Default numerical tolerance for residual checks and rank decisions.
inline constexpr double kDefaultTol = 1e-9;

/// Dense complex matrix, row-major storage.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    CMatrix transpose() const {
        CMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    CMatrix conjugate() const {
        CMatrix c(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) c.a_[k] = std::conj(a_[k]);
        return c;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    CMatrix& operator+=(const CMatrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    CMatrix& operator*=(const cplx& s) {
        for (cplx& z : a_) z *= s;
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, const cplx& s) { return a *= s; }
    friend CMatrix operator*(const cplx& s, CMatrix a) { return a *= s; }

  private:
    void require_same_shape(const CMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMatrix: shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue; // rep matrices are very sparse
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }

/// Kronecker product with index convention (A⊗B)^{ik}_{jl} = A_ij B_kl:
/// row multi-index (i,k) = i*B.rows()+k, column (j,l) = j*B.cols()+l.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

namespace detail {

struct Echelon {
    CMatrix r;                          // reduced row echelon form
    std::vector<std::size_t> pivots;    // pivot column per pivot row
};

/// Gaussian elimination with partial pivoting. A pivot is accepted iff
/// |pivot| > tol * max|entry of the input|; ties in the pivot search keep the
/// lowest row index so bases are reproducible run to run.
inline Echelon rref(CMatrix m, double tol) {
    const double scale = m.max_abs();
    const double thresh = tol * scale;
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = row;
        double bestval = std::abs(m(row, col));
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            const double v = std::abs(m(r, col));
            if (v > bestval) {
                bestval = v;
                best = r;
            }
        }
        if (bestval <= thresh) continue;
        if (best != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(best, j));
        const cplx piv = m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= piv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            const cplx f = m(r, col);
            if (f == cplx{}) continue;
            for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.r = std::move(m);
    return e;
}

} // namespace detail

inline std::size_t rank(const CMatrix& m, double tol = kDefaultTol) {
    return detail::rref(m, tol).pivots.size();
}

/// Basis of {v : Av = 0} as matrix columns. rank + nullity = cols.
inline CMatrix nullspace(const CMatrix& m, double tol = kDefaultTol) {
    const detail::Echelon e = detail::rref(m, tol);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    const std::size_t nullity = m.cols() - e.pivots.size();
    CMatrix basis(m.cols(), nullity);
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        basis(f, out) = 1.0;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) basis(e.pivots[k], out) = -e.r(k, f);
        ++out;
    }
    return basis;
}

inline CMatrix hcat(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
    CMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

inline CMatrix vcat(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column mismatch");
    CMatrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
    return c;
}

/// True iff the column spans of U and V agree: rank U = rank V = rank [U|V].
inline bool same_column_space(const CMatrix& u, const CMatrix& v, double tol = kDefaultTol) {
    if (u.rows() != v.rows()) throw std::invalid_argument("same_column_space: row mismatch");
    const std::size_t ru = rank(u, tol), rv = rank(v, tol);
    if (ru != rv) return false;
    return rank(hcat(u, v), tol) == ru;
}

} // namespace bicov
