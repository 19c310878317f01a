#include "jetwronsk/linalg.hpp"

namespace jetwronsk {

std::size_t matrix_rank(Matrix<Rational> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) m.swap_rows(pivot, rank);
        const Rational p = m(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m(i, col).is_zero()) continue;
            const Rational f = m(i, col) / p;
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

Rational column_minor(const Matrix<Rational>& m, const std::vector<std::size_t>& cols) {
    Matrix<Rational> sub(m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(i, cols[j]);
    return bareiss_determinant(std::move(sub));
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (k == 0) return out;
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == i - 1 + n - k) --i;
        if (i == 0) return out;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

}  // namespace jetwronsk
