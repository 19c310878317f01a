#ifndef JETWRONSK_LINALG_HPP
#define JETWRONSK_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "jetwronsk/polynomial.hpp"
#include "jetwronsk/rational.hpp"

namespace jetwronsk {

// Dense row-major matrix over an exact scalar (Rational or Polynomial).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

namespace detail {
inline bool entry_is_zero(const Rational& x) { return x.is_zero(); }
inline bool entry_is_zero(const Polynomial& p) { return p.is_zero(); }
inline Rational entry_divide(const Rational& a, const Rational& b) { return a / b; }
inline Polynomial entry_divide(const Polynomial& a, const Polynomial& b) {
    auto q = poly_divide_exact(a, b);
    if (!q) throw std::logic_error("Bareiss pivot division was not exact");
    return *q;
}
template <class T>
T entry_one();
template <>
inline Rational entry_one<Rational>() { return Rational(1); }
template <>
inline Polynomial entry_one<Polynomial>() { return Polynomial::constant(Rational(1)); }
}  // namespace detail

// Fraction-free (Bareiss) determinant. Works over any integral domain with
// exact division; every intermediate division is exact by Sylvester's
// identity. Column pivoting only searches for a nonzero entry.
template <class T>
T bareiss_determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return detail::entry_one<T>();
    T prev = detail::entry_one<T>();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && detail::entry_is_zero(m(pivot, k))) ++pivot;
        if (pivot == n) return T();  // zero column, singular
        if (pivot != k) {
            m.swap_rows(pivot, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = detail::entry_divide(num, prev);
            }
            m(i, k) = T();
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    if (negate) det = -det;
    return det;
}

// Laplace expansion along the first row; cross-check for the Bareiss path.
template <class T>
T cofactor_determinant(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return detail::entry_one<T>();
    if (n == 1) return m(0, 0);
    T acc = T();
    for (std::size_t j = 0; j < n; ++j) {
        if (detail::entry_is_zero(m(0, j))) continue;
        Matrix<T> sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(i - 1, cc++) = m(i, c);
            }
        }
        T term = m(0, j) * cofactor_determinant(sub);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Exact row reduction over Q.
std::size_t matrix_rank(Matrix<Rational> m);

// Determinant of the square submatrix taken from the given columns.
Rational column_minor(const Matrix<Rational>& m, const std::vector<std::size_t>& cols);

// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace jetwronsk

#endif
