/**************************************************************************
 * test_constructions.cpp
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

#include <set>

#include "lrc4/constructions.hpp"
#include "lrc4/error.hpp"
#include "lrc4/matrix_io.hpp"
#include "oracle/naive.hpp"

using namespace lrc4;

namespace {

constexpr F4 O = kZero, I = kOne, A = kAlpha;

std::size_t dist(const LinearCode& c) { return min_distance(c); }

}  // namespace

TEST(LocalMatrices, Shapes) {
    EXPECT_EQ(h_delta(3), (Matrix{{I, O, I}, {O, I, I}}));
    EXPECT_EQ(h2x4().rows(), 2u);
    EXPECT_EQ(h2x5().cols(), 5u);
    EXPECT_EQ(g3x5().rows(), 3u);
    EXPECT_EQ(h3x6().rows(), 3u);
    EXPECT_TRUE(is_mds(LinearCode::from_parity(h2x4())));
    EXPECT_TRUE(is_mds(LinearCode::from_parity(h2x5())));
    EXPECT_TRUE(is_mds(LinearCode::from_generator(g3x5())));
    EXPECT_TRUE(is_mds(LinearCode::from_parity(h3x6())));
}

TEST(FixedMatrices, ChecksumsAndKinds) {
    ASSERT_FALSE(fixed_matrices().empty());
    for (const auto& f : fixed_matrices()) {
        EXPECT_EQ(fnv1a64(f.text), f.checksum) << f.name;
        EXPECT_EQ(fixed_matrix(f.name), import_matrix(f.text)) << f.name;
    }
    EXPECT_THROW(fixed_matrix("no_such_matrix"), PreconditionError);
}

TEST(FixedMatrices, CodesHaveDocumentedParameters) {
    for (const auto& s : fixed_code_specs()) {
        const BuiltCode b = fixed_matrix_code(s.name);
        EXPECT_EQ(b.code.length(), s.n) << s.name;
        EXPECT_EQ(b.code.dimension(), s.k) << s.name;
        EXPECT_EQ(dist(b.code), s.d) << s.name;
        EXPECT_EQ(b.r, s.r);
        EXPECT_EQ(b.delta, s.delta);
    }
}

TEST(FixedMatrices, D9ExampleWeightNine) {
    const auto w = weight_distribution(fixed_matrix_code("d9_example").code);
    EXPECT_EQ(w.min_distance(), 9u);
    EXPECT_EQ(w[9], 108u);
}

TEST(FixedMatrices, H13IsCornerOfH17) {
    const Matrix h17 = fixed_matrix("h17");
    const Matrix h13 = fixed_matrix_code("h13").matrix;
    ASSERT_EQ(h13.rows(), 9u);
    ASSERT_EQ(h13.cols(), 13u);
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = 0; c < 13; ++c) EXPECT_EQ(h13(r, c), h17(r, c));
}

TEST(FixedMatrices, C18MinusCodesArePunctures) {
    const LinearCode c18 = fixed_matrix_code("c18").code;
    EXPECT_EQ(fixed_matrix_code("c18_minus4").code, puncture(c18, from_one_based({13, 14, 15, 17})));
    EXPECT_EQ(fixed_matrix_code("c18_minus6").code, puncture(c18, from_one_based({13, 14, 15, 16, 17, 18})));
}

TEST(Bch, GeneratorPolynomial) {
    const Poly4 g = bch17_generator_poly();
    EXPECT_EQ(g.size(), 14u);
    EXPECT_EQ(g.front(), kOne);
    EXPECT_EQ(g.back(), kOne);
    const F256 gamma = f256_seventeenth_root();
    for (int i = -5; i <= 5; ++i) EXPECT_TRUE(poly_eval(g, gamma.pow(i)).is_zero()) << i;
    EXPECT_FALSE(poly_eval(g, gamma.pow(6)).is_zero());
    // x^17 - 1 is divisible by g: every cyclic shift of a codeword stays in the code.
    const LinearCode c = bch_c17();
    const Vector w = c.generator().row_copy(0);
    Vector shifted(17);
    for (std::size_t i = 0; i < 17; ++i) shifted[(i + 1) % 17] = w[i];
    EXPECT_TRUE(c.contains(shifted));
}

TEST(Bch, MatchesPrintedGenerator) {
    const LinearCode bch = bch_c17();
    const LinearCode printed = LinearCode::from_generator(g17());
    EXPECT_EQ(bch.length(), 17u);
    EXPECT_EQ(bch.dimension(), 4u);
    const auto wb = weight_distribution(bch);
    EXPECT_EQ(wb, weight_distribution(printed));
    EXPECT_EQ(wb.min_distance(), 12u);
    EXPECT_EQ(naive::weight_distribution(naive::from(g17()), 17), wb.counts);
}

TEST(PunctureTables, RowsReproduceParameters) {
    for (auto base : {TableBase::c17, TableBase::c16, TableBase::c21})
        for (const auto& row : puncture_table(base)) {
            const BuiltCode b = table_puncture_family(base, row.n);
            EXPECT_EQ(b.code.length(), row.n) << b.name;
            EXPECT_EQ(b.code.dimension(), row.k) << b.name;
            EXPECT_EQ(dist(b.code), row.d) << b.name;
            EXPECT_EQ(b.code.length() + row.positions.size(), puncture_table(base).front().n);
        }
    EXPECT_THROW(table_puncture_family(TableBase::c17, 9), DomainError);
}

TEST(PunctureTables, C16LengthNineCompletionIsUnique) {
    const std::set<std::size_t> printed = {1, 2, 3, 10, 12, 16};
    const LinearCode c16 = LinearCode::from_generator(g16());
    std::vector<std::size_t> good;
    for (std::size_t p = 1; p <= 16; ++p) {
        if (printed.count(p)) continue;
        std::vector<std::size_t> pos(printed.begin(), printed.end());
        pos.push_back(p);
        const LinearCode c = puncture(c16, from_one_based(pos));
        AssessOptions opts;
        opts.check_residue = false;
        const Assessment a = verify_optimal(c, 2, 3, opts);
        if (c.dimension() == 3 && a.params.d == 5 && a.optimal()) good.push_back(p);
    }
    EXPECT_EQ(good, (std::vector<std::size_t>{4}));
    // The printed six positions alone leave length 10.
    const std::vector<std::size_t> six(printed.begin(), printed.end());
    EXPECT_EQ(puncture(c16, from_one_based(six)).length(), 10u);
}

TEST(Gtp, PreconditionsRejectBadShapes) {
    GtpSpec bad{3, h2x4(), ones_row(2), Matrix{{O, I, A, I}}};
    EXPECT_THROW(check_gtp_preconditions(bad), PreconditionError);
    GtpSpec wide{2, h2x4(), ones_row(2), Matrix{{O, I, A}}};
    EXPECT_THROW(check_gtp_preconditions(wide), PreconditionError);
}

TEST(Gtp, PrintedThreeThreeSplitStacksToNonMds) {
    const GtpSpec printed{2, gtp33_local(), ones_row(2), gtp33_printed_global()};
    EXPECT_FALSE(gtp_stacked_condition(printed));
    EXPECT_THROW(check_gtp_preconditions(printed), PreconditionError);
    EXPECT_NO_THROW(check_gtp_preconditions(printed, false));
    const LinearCode stacked = LinearCode::from_parity(vstack(gtp33_local(), gtp33_printed_global()));
    EXPECT_EQ(stacked.dimension(), 1u);
    EXPECT_EQ(dist(stacked), 4u);
    for (std::size_t ell : {2, 3, 4}) {
        const GtpSpec s{ell, gtp33_local(), ones_row(ell), gtp33_printed_global()};
        EXPECT_EQ(dist(LinearCode::from_parity(gtp_parity(s))), 4u) << "ell=" << ell;
    }
}

TEST(Gtp, CorrectedThreeThreeSplitDiffersInOneEntry) {
    const Matrix printed = gtp33_printed_global();
    const Matrix fixed = gtp33_global();
    std::size_t diffs = 0;
    for (std::size_t r = 0; r < printed.rows(); ++r)
        for (std::size_t c = 0; c < printed.cols(); ++c) diffs += printed(r, c) != fixed(r, c);
    EXPECT_EQ(diffs, 1u);
    EXPECT_TRUE(gtp_stacked_condition(GtpSpec{2, gtp33_local(), ones_row(2), fixed}));
}

TEST(Gtp, ContractForFamilySpecs) {
    for (std::size_t ell : {2, 3, 4})
        for (const auto& ns : gtp_family_specs(ell)) {
            const GtpSpec& s = ns.spec;
            EXPECT_NO_THROW(check_gtp_preconditions(s)) << ns.family;
            const LinearCode c = gtp(s);
            EXPECT_EQ(c.dimension(), ell * s.r() - s.mu() * s.nu()) << ns.family;
            EXPECT_EQ(gtp_dimension(s), c.dimension());
            EXPECT_EQ(rank(gtp_parity(s)), ell * (s.delta() - 1) + s.mu() * s.nu());
            EXPECT_EQ(gtp_distance_bound(s), ns.distance) << ns.family;
            EXPECT_EQ(dist(c), ns.distance) << ns.family << " ell=" << ell;
        }
}

TEST(TailCriteria, DistanceEightMatrix) {
    const TailCriteria t = d8_criteria(d8_2_3_family(5));
    EXPECT_EQ(t.u3.size(), 12u);
    EXPECT_TRUE(t.independent);
    EXPECT_TRUE(t.pairwise);
    EXPECT_TRUE(t.complement_line);
    EXPECT_EQ(t.complement_coeffs, (Vector{A, I}));
    EXPECT_EQ(t.tails.size(), 5u);
}

TEST(TailCriteria, DistanceTwelveMatrix) {
    const TailCriteria t = d12_criteria(d12_2_3_family(5));
    EXPECT_EQ(t.u3.size(), 12u);
    EXPECT_TRUE(t.independent);
    EXPECT_TRUE(t.pairwise);
    EXPECT_TRUE(t.complement_line);
    EXPECT_EQ(t.complement_coeffs, (Vector{I, I}));
}

TEST(TailCriteria, DistanceTwelveCriteriaFailOnDistanceEightMatrix) {
    // The d = 8 matrix has three global rows, too few for pairwise independent 2-dim tails.
    EXPECT_FALSE(d12_criteria(d8_2_3_family(5)).pairwise);
}

TEST(Spread, FieldSpreadPartitionsNonzeroVectors) {
    const auto s = gf16_spread();
    ASSERT_EQ(s.size(), 17u);
    std::set<unsigned> covered;
    for (const auto& m : s) {
        EXPECT_EQ(rank(m), 2u);
        naive::for_each_combination(naive::from(m), 4, [&](const naive::Row& w) {
            unsigned key = 0;
            for (int x : w) key = key * 4 + static_cast<unsigned>(x);
            if (key) EXPECT_TRUE(covered.insert(key).second);
        });
    }
    EXPECT_EQ(covered.size(), 255u);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_EQ(rank(vstack(s[i], s[j])), 4u);
}

TEST(Spread, HexacodeTails) {
    EXPECT_EQ(hexacode_tails(6).size(), 18u);
    for (const auto& t : hexacode_tails(6)) EXPECT_EQ(weight(t), 3u);
}

TEST(Spread, SmallInstancesByEnumeration) {
    for (std::size_t ell : {3, 4}) {
        const BuiltCode b = spread_construction_3_4_d12(ell);
        EXPECT_EQ(b.code.length(), 6 * ell);
        EXPECT_EQ(b.code.dimension(), 3 * ell - 5);
        EXPECT_EQ(dist(b.code), 12u);
        EXPECT_TRUE(certify_spread(b).passed());
    }
}

TEST(Spread, ThreeGroupsShareC18ParametersButNotItsWeights) {
    const auto spread = weight_distribution(spread_construction_3_4_d12(3).code);
    const auto c18 = weight_distribution(fixed_matrix_code("c18").code);
    EXPECT_EQ(spread.min_distance(), 12u);
    EXPECT_EQ(spread.total(), c18.total());
    EXPECT_EQ(spread[12], 99u);
    EXPECT_EQ(c18[12], 114u);
}

TEST(Spread, CertificateAtSeventeenGroups) {
    const BuiltCode b = spread_construction_3_4_d12(17);
    EXPECT_EQ(b.code.length(), 102u);
    EXPECT_EQ(b.code.dimension(), 46u);
    const SpreadCertificate c = certify_spread(b);
    EXPECT_EQ(c.pairs_checked, 136u);
    EXPECT_EQ(c.min_pair_weight, 12u);
    EXPECT_TRUE(c.passed());
}

TEST(Spread, CertificateRejectsRepeatedTails) {
    BuiltCode b = spread_construction_3_4_d12(4);
    const std::size_t rows = b.matrix.rows();
    for (std::size_t r = rows - 5; r < rows; ++r)
        for (std::size_t c = 3; c < 6; ++c) b.matrix.at(r, 6 + c) = b.matrix(r, c);
    const SpreadCertificate c = certify_spread(b);
    EXPECT_FALSE(c.intersections_ok);
    EXPECT_FALSE(c.passed());
}

TEST(Spread, DomainLimits) {
    EXPECT_THROW(spread_construction_3_4_d12(2), DomainError);
    EXPECT_THROW(spread_construction_3_4_d12(18), DomainError);
    EXPECT_THROW(spread_construction_3_4_d12(22), DomainError);
}

TEST(HexacodePairs, WeightSixSumsHaveWeightFour) {
    const LinearCode hex = LinearCode::from_parity(h3x6());
    const auto w6 = codewords_of_weight(hex, 6);
    ASSERT_EQ(w6.size(), 18u);
    std::size_t pairs = 0;
    for (const auto& x : w6)
        for (const auto& y : w6) {
            bool multiple = false;
            for (auto s : {kOne, kAlpha, kBeta}) {
                Vector sx(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) sx[i] = s * x[i];
                multiple = multiple || sx == y;
            }
            if (multiple) continue;
            Vector sum(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
            EXPECT_EQ(weight(sum), 4u);
            ++pairs;
        }
    EXPECT_EQ(pairs, 18u * 15u);
}
