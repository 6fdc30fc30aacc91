/**************************************************************************
 * matrix.cpp
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
#include "lrc4/matrix.hpp"

#include <algorithm>
#include <utility>

#include "lrc4/error.hpp"

namespace lrc4 {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<F4> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw PreconditionError("matrix entry count does not match shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<F4>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = kOne;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw PreconditionError("row length does not match column count");
        std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

Matrix Matrix::row_vector(const Vector& v) { return Matrix(1, v.size(), v); }

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](F4 x) { return x.is_zero(); });
}

Vector Matrix::row_copy(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

namespace {

// In-place Gauss-Jordan on a row-major buffer; returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<F4>& a, std::size_t rows, std::size_t cols,
                                   std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c].is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(p * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((p + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(r * cols));
        }
        const F4 inv = a[r * cols + c].inverse();
        if (inv != kOne) {
            for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const F4 f = a[i * cols + c];
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < cols; ++j) a[i * cols + j] += f * a[r * cols + j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
    std::vector<F4> a = m.entries();
    auto pivots = eliminate(a, m.rows(), m.cols(), m.cols());
    a.resize(pivots.size() * m.cols());
    return {Matrix(pivots.size(), m.cols(), std::move(a)), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    std::vector<F4> a = m.entries();
    return eliminate(a, m.rows(), m.cols(), m.cols()).size();
}

Matrix null_space(const Matrix& m) {
    const auto [red, pivots] = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;

    Matrix basis(n - pivots.size(), n);
    std::size_t out = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis.at(out, f) = kOne;
        // x_p = -R[i][f]; characteristic 2 makes the sign irrelevant.
        for (std::size_t i = 0; i < pivots.size(); ++i) basis.at(out, pivots[i]) = red(i, f);
        ++out;
    }
    return basis;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m(r, c);
    return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw PreconditionError("multiply: inner dimensions differ");
    Matrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const F4 x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p.at(i, j) += x * b(k, j);
        }
    return p;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("add: shapes differ");
    std::vector<F4> e(a.entries().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries()[i] + b.entries()[i];
    return Matrix(a.rows(), a.cols(), std::move(e));
}

Matrix scale(const Matrix& m, F4 s) {
    std::vector<F4> e = m.entries();
    for (auto& x : e) x *= s;
    return Matrix(m.rows(), m.cols(), std::move(e));
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const F4 x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) k.at(i * b.rows() + p, j * b.cols() + q) = x * b(p, q);
        }
    return k;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw PreconditionError("vstack: column counts differ");
    std::vector<F4> e = top.entries();
    e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
    return Matrix(top.rows() + bottom.rows(), top.cols(), std::move(e));
}

Matrix hstack(const Matrix& left, const Matrix& right) {
    if (left.rows() != right.rows()) throw PreconditionError("hstack: row counts differ");
    Matrix h(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) h.at(r, c) = left(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c) h.at(r, left.cols() + c) = right(r, c);
    }
    return h;
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix d(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) d.at(r0 + r, c0 + c) = b(r, c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return d;
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
    Matrix s(m.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= m.cols()) throw PreconditionError("select_columns: index out of range");
        for (std::size_t r = 0; r < m.rows(); ++r) s.at(r, j) = m(r, cols[j]);
    }
    return s;
}

Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows) {
    Matrix s(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= m.rows()) throw PreconditionError("select_rows: index out of range");
        for (std::size_t c = 0; c < m.cols(); ++c) s.at(i, c) = m(rows[i], c);
    }
    return s;
}

Matrix remove_columns(const Matrix& m, std::span<const std::size_t> cols) {
    std::vector<bool> drop(m.cols(), false);
    for (auto c : cols) {
        if (c >= m.cols()) throw PreconditionError("remove_columns: index out of range");
        drop[c] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!drop[c]) keep.push_back(c);
    return select_columns(m, keep);
}

Vector apply(const Matrix& m, std::span<const F4> v) {
    if (v.size() != m.cols()) throw PreconditionError("apply: vector length does not match columns");
    Vector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.row(r), v);
    return out;
}

Vector left_apply(std::span<const F4> v, const Matrix& m) {
    if (v.size() != m.rows()) throw PreconditionError("left_apply: vector length does not match rows");
    Vector out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r].is_zero()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] += v[r] * m(r, c);
    }
    return out;
}

F4 dot(std::span<const F4> x, std::span<const F4> y) {
    F4 acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

std::size_t weight(std::span<const F4> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](F4 x) { return !x.is_zero(); }));
}

std::optional<Vector> solve(const Matrix& m, std::span<const F4> rhs) {
    if (rhs.size() != m.rows()) throw PreconditionError("solve: rhs length does not match rows");
    const std::size_t cols = m.cols() + 1;
    std::vector<F4> a(m.rows() * cols);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a[r * cols + c] = m(r, c);
        a[r * cols + m.cols()] = rhs[r];
    }
    const auto pivots = eliminate(a, m.rows(), cols, m.cols());
    for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
        if (!a[r * cols + m.cols()].is_zero()) return std::nullopt;
    }
    Vector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i * cols + m.cols()];
    return x;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    return rref(a).reduced == rref(b).reduced;
}

}  // namespace lrc4
