/**************************************************************************
 * test_repair.cpp
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
#include "lrc4/lrc.hpp"
#include "oracle/gen.hpp"

using namespace lrc4;

namespace {

ErasureWord with_erasures(const Vector& c, const Support& positions) {
    ErasureWord w(c.begin(), c.end());
    for (auto i : positions) w[i].reset();
    return w;
}

// All size-`k` subsets of `from`.
std::vector<Support> subsets(const Support& from, std::size_t k) {
    std::vector<Support> out;
    std::vector<bool> pick(from.size(), false);
    std::fill(pick.end() - static_cast<long>(k), pick.end(), true);
    do {
        Support s;
        for (std::size_t i = 0; i < from.size(); ++i)
            if (pick[i]) s.push_back(from[i]);
        out.push_back(s);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

struct C18Fixture : ::testing::Test {
    BuiltCode b = fixed_matrix_code("c18");
    RepairGroupSet groups = make_repair_groups(b.code, b.groups);
};

}  // namespace

TEST_F(C18Fixture, LocalParityMatricesHaveDeltaMinusOneRows) {
    ASSERT_EQ(groups.size(), 3u);
    for (std::size_t j = 0; j < groups.size(); ++j) {
        EXPECT_EQ(groups.local_parity[j].rows(), 3u);
        EXPECT_EQ(groups.local_parity[j].cols(), 6u);
    }
}

TEST_F(C18Fixture, SingleGroupTripleErasuresRepairLocally) {
    gen::Gen g(31);
    for (int t = 0; t < 5; ++t) {
        const Vector c = b.code.encode(g.vector(4));
        for (const auto& grp : b.groups)
            for (const auto& e : subsets(grp, 3)) {
                const RepairResult r = repair_erasures(b.code, groups, with_erasures(c, e));
                ASSERT_EQ(r.status, RepairStatus::repaired_locally);
                EXPECT_EQ(r.codeword(), c);
                EXPECT_EQ(r.local, e);
                EXPECT_TRUE(r.global.empty());
            }
    }
}

TEST_F(C18Fixture, ElevenErasuresRepairGlobally) {
    gen::Gen g(32);
    const Vector c = b.code.encode(g.vector(4));
    // Four erasures in each of the first two groups are beyond local repair.
    const Support e = from_one_based({1, 2, 3, 4, 7, 8, 9, 10, 13, 14, 15});
    const RepairResult r = repair_erasures(b.code, groups, with_erasures(c, e));
    EXPECT_EQ(r.status, RepairStatus::repaired_globally);
    EXPECT_EQ(r.codeword(), c);
}

TEST_F(C18Fixture, CodewordSupportIsUnrecoverable) {
    const auto w12 = codewords_of_weight(b.code, 12);
    ASSERT_FALSE(w12.empty());
    Support supp;
    for (std::size_t i = 0; i < w12[0].size(); ++i)
        if (!w12[0][i].is_zero()) supp.push_back(i);
    const RepairResult r = repair_erasures(b.code, groups, with_erasures(Vector(18), supp));
    EXPECT_EQ(r.status, RepairStatus::unrecoverable);
    EXPECT_FALSE(r.ok());
}

TEST_F(C18Fixture, CorruptedWordIsInconsistent) {
    Vector c(18);
    c[0] = kOne;
    const RepairResult r = repair_erasures(b.code, groups, with_erasures(c, Support{1, 2}));
    EXPECT_EQ(r.status, RepairStatus::inconsistent);
}

TEST_F(C18Fixture, NoErasuresIsLocalIdentity) {
    const Vector c(18);
    const RepairResult r = repair_erasures(b.code, groups, with_erasures(c, {}));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.codeword(), c);
}

TEST_F(C18Fixture, LengthMismatchThrows) {
    EXPECT_THROW(repair_erasures(b.code, groups, ErasureWord(5)), PreconditionError);
}

TEST(RepairProperty, RandomErasuresBelowDistanceAlwaysRepair) {
    gen::Gen g(33);
    for (const auto& name : {"c9", "h16", "c18", "d9_example"}) {
        const BuiltCode b = fixed_matrix_code(name);
        const RepairGroupSet groups = make_repair_groups(b.code, b.groups);
        const std::size_t d = b.design_distance;
        for (int t = 0; t < 30; ++t) {
            const Vector c = b.code.encode(g.vector(b.code.dimension()));
            const Support e = g.subset(b.code.length(), g.between(1, d - 1));
            const RepairResult r = repair_erasures(b.code, groups, with_erasures(c, e));
            ASSERT_TRUE(r.ok()) << name;
            EXPECT_EQ(r.codeword(), c) << name;
        }
    }
}

TEST(RepairProperty, GlobalOnlyRepairWithoutGroups) {
    gen::Gen g(34);
    const BuiltCode b = fixed_matrix_code("c18");
    const RepairGroupSet none = make_repair_groups(b.code, {});
    const Vector c = b.code.encode(g.vector(4));
    const RepairResult r = repair_erasures(b.code, none, with_erasures(c, Support{0, 5, 9}));
    EXPECT_EQ(r.status, RepairStatus::repaired_globally);
    EXPECT_EQ(r.codeword(), c);
}
