/**************************************************************************
 * repair.cpp
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
#include <algorithm>

#include "lrc4/error.hpp"
#include "lrc4/lrc.hpp"

namespace lrc4 {

const char* to_string(RepairStatus s) {
    switch (s) {
        case RepairStatus::repaired_locally: return "repaired locally";
        case RepairStatus::repaired_globally: return "repaired globally";
        case RepairStatus::unrecoverable: return "unrecoverable";
        default: return "inconsistent";
    }
}

Vector RepairResult::codeword() const {
    Vector v(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!word[i]) throw PreconditionError("word still has erasures");
        v[i] = *word[i];
    }
    return v;
}

namespace {

enum class Solve { solved, underdetermined, inconsistent };

// Fills the erased coordinates `erased` (indices into `cols`) of h * x^T = 0.
Solve solve_erasures(const Matrix& h, const std::vector<std::size_t>& cols, ErasureWord& word) {
    std::vector<std::size_t> unknown;
    std::vector<std::size_t> known;
    for (std::size_t j = 0; j < cols.size(); ++j) (word[cols[j]] ? known : unknown).push_back(j);
    Vector rhs(h.rows());
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (auto j : known) rhs[r] += h(r, j) * *word[cols[j]];
    if (unknown.empty()) {
        return std::all_of(rhs.begin(), rhs.end(), [](F4 x) { return x.is_zero(); }) ? Solve::solved
                                                                                        : Solve::inconsistent;
    }
    const Matrix hu = select_columns(h, unknown);
    const auto x = solve(hu, rhs);  // characteristic 2: -rhs == rhs
    if (!x) return Solve::inconsistent;
    if (rank(hu) < unknown.size()) return Solve::underdetermined;
    for (std::size_t i = 0; i < unknown.size(); ++i) word[cols[unknown[i]]] = (*x)[i];
    return Solve::solved;
}

}  // namespace

RepairResult repair_erasures(const LinearCode& code, const RepairGroupSet& groups, const ErasureWord& word) {
    const std::size_t n = code.length();
    if (word.size() != n) throw PreconditionError("word length does not match code length");
    if (groups.local_parity.size() != groups.groups.size())
        throw PreconditionError("repair group set without local parity matrices");

    RepairResult res;
    res.word = word;
    auto erased_in = [&](const Support& g) {
        std::size_t e = 0;
        for (auto i : g) e += res.word[i] ? 0 : 1;
        return e;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t j = 0; j < groups.size(); ++j) {
            const Support& g = groups.groups[j];
            const std::size_t e = erased_in(g);
            if (e == 0) continue;
            const Matrix& h = groups.local_parity[j];
            ErasureWord trial = res.word;
            const Solve s = solve_erasures(h, g, trial);
            if (s == Solve::inconsistent) {
                res.status = RepairStatus::inconsistent;
                return res;
            }
            if (s != Solve::solved) continue;
            for (auto i : g)
                if (!res.word[i]) res.local.push_back(i);
            res.word = std::move(trial);
            progress = true;
        }
    }

    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    const bool remaining = std::any_of(res.word.begin(), res.word.end(), [](const auto& x) { return !x; });
    ErasureWord trial = res.word;
    const Solve s = solve_erasures(code.parity(), all, trial);
    if (s == Solve::inconsistent) {
        res.status = RepairStatus::inconsistent;
        return res;
    }
    if (s == Solve::underdetermined) {
        res.status = RepairStatus::unrecoverable;
        return res;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!res.word[i]) res.global.push_back(i);
    res.word = std::move(trial);
    std::sort(res.local.begin(), res.local.end());
    res.status = remaining ? RepairStatus::repaired_globally : RepairStatus::repaired_locally;
    return res;
}

}  // namespace lrc4
