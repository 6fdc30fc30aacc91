/**************************************************************************
 * test_matrix.cpp
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
#include <gtest/gtest.h>

#include "lrc4/error.hpp"
#include "lrc4/matrix.hpp"
#include "oracle/gen.hpp"
#include "oracle/naive.hpp"

using namespace lrc4;

namespace {
constexpr F4 O = kZero, I = kOne, A = kAlpha, B = kBeta;
}

TEST(Matrix, RrefOfSmallMatrix) {
    const Matrix m{{O, A, I}, {I, I, O}, {I, B, I}};
    const RrefResult r = rref(m);
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r.reduced.rows(), 2u);
    EXPECT_EQ(r.reduced, (Matrix{{I, O, B}, {O, I, B}}));
}

TEST(Matrix, NullSpaceAnnihilates) {
    const Matrix h{{I, O, I}, {O, I, I}};
    const Matrix ns = null_space(h);
    ASSERT_EQ(ns.rows(), 1u);
    EXPECT_TRUE(multiply(h, transpose(ns)).is_zero());
    EXPECT_EQ(ns, (Matrix{{I, I, I}}));
}

TEST(Matrix, NullSpaceOfZeroAndFullRank) {
    EXPECT_EQ(null_space(Matrix(2, 3)).rows(), 3u);
    EXPECT_EQ(null_space(Matrix::identity(4)).rows(), 0u);
}

TEST(Matrix, KronAndStacks) {
    const Matrix a{{I, A}};
    const Matrix b{{I}, {B}};
    const Matrix k = kron(a, b);
    EXPECT_EQ(k, (Matrix{{I, A}, {B, I}}));
    EXPECT_EQ(vstack(a, a).rows(), 2u);
    EXPECT_EQ(hstack(a, a).cols(), 4u);
    const Matrix blocks[] = {a, a};
    const Matrix bd = block_diagonal(blocks);
    EXPECT_EQ(bd, (Matrix{{I, A, O, O}, {O, O, I, A}}));
}

TEST(Matrix, SelectAndRemove) {
    const Matrix m{{I, A, B}, {O, I, A}};
    const std::size_t cols[] = {2, 0};
    EXPECT_EQ(select_columns(m, cols), (Matrix{{B, I}, {A, O}}));
    const std::size_t drop[] = {1};
    EXPECT_EQ(remove_columns(m, drop), (Matrix{{I, B}, {O, A}}));
    const std::size_t rows[] = {1};
    EXPECT_EQ(select_rows(m, rows), (Matrix{{O, I, A}}));
}

TEST(Matrix, SolveConsistentAndInconsistent) {
    const Matrix m{{I, A}, {O, I}};
    const Vector rhs{B, I};
    const auto x = solve(m, rhs);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(lrc4::apply(m, *x), rhs);
    const Matrix s{{I, I}, {I, I}};
    EXPECT_FALSE(solve(s, Vector{I, O}).has_value());
}

TEST(Matrix, VectorHelpers) {
    const Vector v{I, O, A};
    EXPECT_EQ(weight(v), 2u);
    EXPECT_EQ(dot(v, Vector{A, B, A}), A + B);
    const Matrix m{{I, O, O}, {O, O, I}};
    EXPECT_EQ(left_apply(Vector{I, A}, m), (Vector{I, O, A}));
}

TEST(Matrix, SameRowSpace) {
    const Matrix a{{I, A}, {O, I}};
    const Matrix b{{I, O}, {O, B}};
    EXPECT_TRUE(same_row_space(a, b));
    EXPECT_FALSE(same_row_space(a, Matrix{{I, A}}));
}

TEST(Matrix, ShapeErrors) {
    EXPECT_THROW(multiply(Matrix(2, 3), Matrix(2, 3)), PreconditionError);
    EXPECT_THROW(Matrix(2, 2, std::vector<F4>(3)), PreconditionError);
}

TEST(MatrixProperty, RankMatchesOracleAndRankNullity) {
    gen::Gen g(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = g.between(1, 8), cols = g.between(1, 10);
        const Matrix m = g.matrix(rows, cols);
        const std::size_t rk = rank(m);
        EXPECT_EQ(rk, naive::rank(naive::from(m)));
        const Matrix ns = null_space(m);
        EXPECT_EQ(rk + ns.rows(), cols);
        EXPECT_TRUE(multiply(m, transpose(ns)).is_zero());
        EXPECT_EQ(rank(transpose(m)), rk);
    }
}

TEST(MatrixProperty, RrefIsIdempotentAndPreservesRowSpace) {
    gen::Gen g(12);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix m = g.matrix(g.between(1, 6), g.between(1, 9));
        const RrefResult r = rref(m);
        EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
        if (!r.reduced.empty()) EXPECT_TRUE(same_row_space(m, r.reduced));
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            EXPECT_EQ(r.reduced(i, r.pivots[i]), kOne);
            for (std::size_t j = 0; j < r.reduced.rows(); ++j)
                if (j != i) EXPECT_TRUE(r.reduced(j, r.pivots[i]).is_zero());
        }
    }
}

TEST(MatrixProperty, MultiplicationIsAssociativeAndKronMixes) {
    gen::Gen g(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = g.matrix(3, 4), b = g.matrix(4, 2), c = g.matrix(2, 5);
        EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
        const Matrix p = g.matrix(2, 3), q = g.matrix(3, 2), r = g.matrix(2, 2), s = g.matrix(2, 2);
        EXPECT_EQ(multiply(kron(p, r), kron(q, s)), kron(multiply(p, q), multiply(r, s)));
    }
}

TEST(MatrixProperty, SolveFindsSolutionsOfConsistentSystems) {
    gen::Gen g(14);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix m = g.matrix(g.between(1, 6), g.between(1, 7));
        const Vector x = g.vector(m.cols());
        const Vector rhs = lrc4::apply(m, x);
        const auto sol = solve(m, rhs);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(lrc4::apply(m, *sol), rhs);
    }
}
