#pragma once

// Dense exact linear algebra over a field (BigRational or QuadGaussian).
// Everything is exact, so pivoting only needs "nonzero", never "largest".

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gsp4 {

template <typename F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = F(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<F> row(std::size_t r) const {
        return std::vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!(x == F(0))) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const F& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
    friend Matrix operator*(const F& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& x = a(r, k);
                if (x == F(0)) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += x * b(k, c);
            }
        return p;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!(a.data_[k] == b.data_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <typename F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < m.rows() && m(piv, c) == F(0)) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(lead, k));
        F inv = F(1) / m(lead, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c) == F(0)) continue;
            F factor = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

template <typename F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

template <typename F>
std::size_t rank_of_vectors(const std::vector<std::vector<F>>& vecs) {
    if (vecs.empty()) return 0;
    return rank(Matrix<F>::from_rows(vecs));
}

/// Basis of {x : m x = 0}, one vector per free column.
template <typename F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse of a square matrix; throws std::domain_error when singular.
template <typename F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = F(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Matrix<F> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

/// Determinant by fraction-free (Bareiss) elimination.
template <typename F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return F(1);
    F sign = F(1);
    F prev = F(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == F(0)) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k) == F(0)) ++swap_row;
            if (swap_row == n) return F(0);
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
            sign = -sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c) {
                F num = m(r, c) * m(k, k) - m(r, k) * m(k, c);
                m(r, c) = num / prev;
            }
            m(r, k) = F(0);
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Solves x * m = target for a row vector x (m has full row rank over its span).
/// Returns false when target is not in the row space.
template <typename F>
bool solve_row_combination(const Matrix<F>& m, const std::vector<F>& target, std::vector<F>& out) {
    // Columns of [m^T | target^T]; reduce and read the combination.
    std::size_t k = m.rows(), n = m.cols();
    Matrix<F> aug(n, k + 1);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < k; ++r) aug(c, r) = m(r, c);
        aug(c, k) = target[c];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == k) return false;
    out.assign(k, F(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) out[pivots[r]] = aug(r, k);
    return true;
}

}  // namespace gsp4
