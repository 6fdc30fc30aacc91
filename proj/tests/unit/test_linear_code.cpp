/**************************************************************************
 * test_linear_code.cpp
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

#include "lrc4/constructions.hpp"
#include "lrc4/error.hpp"
#include "lrc4/linear_code.hpp"
#include "oracle/gen.hpp"
#include "oracle/naive.hpp"

using namespace lrc4;

namespace {

constexpr F4 O = kZero, I = kOne, A = kAlpha, B = kBeta;

std::vector<std::uint64_t> counts(const LinearCode& c) { return weight_distribution(c).counts; }

Matrix first_rows(const Matrix& m, std::size_t count) {
    std::vector<std::size_t> rows(count);
    for (std::size_t i = 0; i < count; ++i) rows[i] = i;
    return select_rows(m, rows);
}

}  // namespace

TEST(LinearCode, CanonicalForms) {
    const LinearCode c = LinearCode::from_parity(Matrix{{I, O, I}, {O, I, I}});
    EXPECT_EQ(c.length(), 3u);
    EXPECT_EQ(c.dimension(), 1u);
    EXPECT_EQ(c.generator(), (Matrix{{I, I, I}}));
    EXPECT_EQ(c, LinearCode::from_generator(Matrix{{A, A, A}}));
    EXPECT_TRUE(c.contains(Vector{B, B, B}));
    EXPECT_FALSE(c.contains(Vector{I, A, I}));
    EXPECT_EQ(c.encode(Vector{A}), (Vector{A, A, A}));
}

TEST(LinearCode, DependentRowsAreDropped) {
    const LinearCode c = LinearCode::from_generator(Matrix{{I, A, O}, {A, B, O}});
    EXPECT_EQ(c.dimension(), 1u);
    EXPECT_TRUE(c.degenerate());
    EXPECT_EQ(c.zero_coordinates(), (Support{2}));
}

TEST(LinearCode, RejectsEmptyInput) {
    EXPECT_THROW(LinearCode::from_generator(Matrix(2, 3)), PreconditionError);
    EXPECT_THROW(LinearCode::from_parity(Matrix()), PreconditionError);
}

TEST(LinearCode, OneBasedConversion) {
    EXPECT_EQ(from_one_based({3, 1, 2}), (Support{0, 1, 2}));
    EXPECT_EQ(to_one_based(Support{0, 4}), (std::vector<std::size_t>{1, 5}));
}

TEST(WeightDistribution, SmallMdsCodes) {
    const auto a42 = counts(LinearCode::from_parity(h2x4()));
    EXPECT_EQ(a42, (std::vector<std::uint64_t>{1, 0, 0, 12, 3}));

    const auto a524 = counts(LinearCode::from_parity(mds524_parity()));
    EXPECT_EQ(a524[4], 15u);
    EXPECT_EQ(a524[5], 0u);

    const auto a533 = counts(LinearCode::from_parity(first_rows(mds524_parity(), 2)));
    EXPECT_EQ(a533[3], 30u);
    EXPECT_EQ(a533[4], 15u);
    EXPECT_EQ(a533[5], 18u);

    for (const Matrix& h : {mds634_parity(), h3x6()}) {
        const auto a634 = counts(LinearCode::from_parity(h));
        EXPECT_EQ(a634[4], 45u);
        EXPECT_EQ(a634[5], 0u);
        EXPECT_EQ(a634[6], 18u);
    }
}

TEST(WeightDistribution, MatchesBruteForceScan) {
    for (const Matrix& h : {h2x4(), h2x5(), mds524_parity(), h3x6(), h_delta(4)}) {
        const LinearCode c = LinearCode::from_parity(h);
        EXPECT_EQ(counts(c), naive::weight_distribution_by_scan(naive::from(h), h.cols()));
    }
}

TEST(WeightDistribution, ThreadCountDoesNotChangeResult) {
    const LinearCode c = LinearCode::from_generator(g17());
    EnumerationOptions one{kDefaultEnumerationCap, 1}, four{kDefaultEnumerationCap, 4};
    EXPECT_EQ(weight_distribution(c, one), weight_distribution(c, four));
    EXPECT_EQ(weight_distribution(c, one).total(), 256u);
}

TEST(WeightDistribution, CapIsEnforced) {
    gen::Gen g(3);
    const LinearCode c = g.code(20, 6);
    EnumerationOptions opts;
    opts.cap = 5;
    EXPECT_THROW(weight_distribution(c, opts), CapExceeded);
    try {
        weight_distribution(c, opts);
    } catch (const CapExceeded& e) {
        EXPECT_EQ(e.limit(), 5u);
    }
    opts.cap = 6;
    EXPECT_EQ(weight_distribution(c, opts).total(), 4096u);
}

TEST(WeightDistribution, CodewordsOfWeight) {
    const LinearCode c = LinearCode::from_parity(h2x4());
    const auto w3 = codewords_of_weight(c, 3);
    EXPECT_EQ(w3.size(), 12u);
    for (const auto& w : w3) {
        EXPECT_EQ(weight(w), 3u);
        EXPECT_TRUE(c.contains(w));
    }
}

TEST(CodeOperations, PunctureShortenRestrictDual) {
    const LinearCode c = LinearCode::from_parity(mds634_parity());
    const LinearCode p = puncture(c, Support{5});
    EXPECT_EQ(p.length(), 5u);
    EXPECT_EQ(p.dimension(), 3u);
    EXPECT_EQ(min_distance(p), 3u);
    const LinearCode s = shorten(c, Support{5});
    EXPECT_EQ(s.length(), 5u);
    EXPECT_EQ(s.dimension(), 2u);
    EXPECT_EQ(min_distance(s), 4u);
    EXPECT_EQ(restriction(c, Support{0, 1, 2, 3, 4}), p);
    EXPECT_EQ(dual(dual(c)), c);
    EXPECT_EQ(dual(c).dimension(), 3u);
    EXPECT_TRUE(is_mds(c));
    EXPECT_EQ(defect(LinearCode::from_generator(g17())), 2u);
}

TEST(CodeOperations, DualOfRepetitionIsParityCode) {
    const LinearCode rep = LinearCode::from_parity(h_delta(3));
    EXPECT_EQ(rep.dimension(), 1u);
    EXPECT_EQ(min_distance(rep), 3u);
    EXPECT_EQ(min_distance(dual(rep)), 2u);
}

TEST(CodeProperty, EnumerationMatchesOracle) {
    gen::Gen g(21);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = g.between(2, 12);
        const std::size_t k = g.between(1, std::min<std::size_t>(n, 5));
        const LinearCode c = LinearCode::from_generator(g.full_rank(k, n));
        EXPECT_EQ(counts(c), naive::weight_distribution(naive::from(c.generator()), n));
    }
}

TEST(CodeProperty, MacWilliamsIdentityHolds) {
    gen::Gen g(22);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = g.between(3, 10);
        const std::size_t k = g.between(1, n - 1);
        const LinearCode c = LinearCode::from_generator(g.full_rank(k, n));
        EXPECT_EQ(counts(dual(c)), naive::macwilliams(counts(c), k)) << "n=" << n << " k=" << k;
    }
}

TEST(CodeProperty, PunctureAndShortenChangeParametersAsExpected) {
    gen::Gen g(23);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = g.between(4, 11);
        const std::size_t k = g.between(1, n - 2);
        const LinearCode c = g.code(n, k);
        const Support pos = g.subset(n, 1);
        const std::size_t d = min_distance(c);
        const LinearCode p = puncture(c, pos);
        if (d >= 2) {
            EXPECT_EQ(p.dimension(), k);
            const std::size_t dp = min_distance(p);
            EXPECT_TRUE(dp == d || dp + 1 == d);
        }
        const LinearCode s = shorten(c, pos);
        EXPECT_EQ(s.dimension(), k - 1);
        if (k >= 2) EXPECT_GE(min_distance(s), d);
        // The dual of a punctured code is the shortened dual.
        EXPECT_EQ(dual(p), shorten(dual(c), pos));
    }
}

TEST(CodeProperty, EncodedMessagesAreCodewords) {
    gen::Gen g(24);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = g.between(3, 14);
        const std::size_t k = g.between(1, n - 1);
        const LinearCode c = LinearCode::from_generator(g.full_rank(k, n));
        const Vector w = c.encode(g.vector(k));
        EXPECT_TRUE(c.contains(w));
        EXPECT_TRUE(lrc4::apply(c.parity(), w) == Vector(c.codimension()));
    }
}
