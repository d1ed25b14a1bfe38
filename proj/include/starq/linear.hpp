#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "starq/gaussian.hpp"

namespace starq {

/// Dense matrix over Q(i) for the exact solves; desk-scale sizes only.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Gaussian& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Gaussian& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Gaussian> a_;
};

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(Matrix& m);

/// Exact null-space basis of m (vectors of length cols).
std::vector<std::vector<Gaussian>> null_space(const Matrix& m);

/// One exact solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Gaussian>> solve_linear(const Matrix& a, const std::vector<Gaussian>& b);

/// Canonical row-space form: RREF with zero rows dropped. Two row sets span
/// the same subspace iff their canonical forms are equal.
Matrix row_space_canonical(const Matrix& m);

}  // namespace starq
