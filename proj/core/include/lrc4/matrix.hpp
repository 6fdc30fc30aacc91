/**************************************************************************
 * matrix.hpp
 *
 * Copyright 2026 The lrc4 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "lrc4/galois.hpp"

namespace lrc4 {

using Vector = std::vector<F4>;

/// Dense row-major matrix over GF(4).
///
/// Operations below are free functions that return new matrices; inputs are
/// never modified. at() exists for builders that fill a fresh matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    /// entries.size() must equal rows * cols.
    Matrix(std::size_t rows, std::size_t cols, std::vector<F4> entries);
    /// Rows must all have the same length.
    Matrix(std::initializer_list<std::initializer_list<F4>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    /// 1 x v.size() matrix.
    static Matrix row_vector(const Vector& v);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }
    [[nodiscard]] bool is_zero() const;

    [[nodiscard]] F4 operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    F4& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    [[nodiscard]] std::span<const F4> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    [[nodiscard]] Vector row_copy(std::size_t r) const;
    [[nodiscard]] Vector column(std::size_t c) const;
    [[nodiscard]] const std::vector<F4>& entries() const { return entries_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F4> entries_;
};

struct RrefResult {
    Matrix reduced;
    /// Strictly increasing pivot column indices, one per nonzero row of `reduced`.
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan with first-nonzero pivoting.
/// Zero rows are dropped, so reduced.rows() == rank.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Rows form a basis of {x : m x^T = 0}; rows = cols - rank.
Matrix null_space(const Matrix& m);

Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, F4 s);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);
/// Block-diagonal arrangement of the given matrices.
Matrix block_diagonal(std::span<const Matrix> blocks);

Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols);
Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows);
Matrix remove_columns(const Matrix& m, std::span<const std::size_t> cols);

/// m * v^T.
Vector apply(const Matrix& m, std::span<const F4> v);
/// v * m.
Vector left_apply(std::span<const F4> v, const Matrix& m);
F4 dot(std::span<const F4> x, std::span<const F4> y);
std::size_t weight(std::span<const F4> v);

/// One solution x of m x^T = rhs, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vector> solve(const Matrix& m, std::span<const F4> rhs);

/// True when the row spaces coincide.
bool same_row_space(const Matrix& a, const Matrix& b);

}  // namespace lrc4
