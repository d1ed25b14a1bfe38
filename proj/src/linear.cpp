#include "starq/linear.hpp"

namespace starq {

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        Gaussian inv = Gaussian(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Gaussian factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Gaussian>> null_space(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Gaussian>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Gaussian> v(m.cols());
        v[free] = Gaussian(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Gaussian>> solve_linear(const Matrix& a, const std::vector<Gaussian>& b) {
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<std::size_t> pivots = rref(aug);
    for (std::size_t c : pivots)
        if (c == a.cols()) return std::nullopt;
    std::vector<Gaussian> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

Matrix row_space_canonical(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots = rref(r);
    Matrix out(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(i, c) = r.at(i, c);
    return out;
}

}  // namespace starq
