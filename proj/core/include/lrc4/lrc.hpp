/**************************************************************************
 * lrc.hpp
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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc4/linear_code.hpp"

namespace lrc4 {

struct LrcParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t r = 0;
    std::size_t delta = 0;
};

/// n - k + 1 - (ceil(k/r) - 1)(delta - 1).
///
/// Throws PreconditionError unless k >= 1, r >= 1, delta >= 2, n > k, and
/// DomainError when the bound is not positive.
std::size_t singleton_bound(std::size_t n, std::size_t k, std::size_t r, std::size_t delta);

/// Repair groups together with their local parity-check matrices.
///
/// local_parity[j] has |groups[j]| columns and generates the dual of the
/// restriction of the code to groups[j].
struct RepairGroupSet {
    std::vector<Support> groups;
    std::vector<Matrix> local_parity;

    [[nodiscard]] std::size_t size() const { return groups.size(); }
};

RepairGroupSet make_repair_groups(const LinearCode& code, std::vector<Support> groups);

struct GroupCheck {
    Support support;
    bool size_ok = false;
    std::size_t local_dimension = 0;
    std::size_t local_distance = 0;
    bool distance_ok = false;
};

struct LocalityReport {
    bool covers = false;
    Support uncovered;
    bool sizes_ok = false;
    bool distances_ok = false;
    std::vector<GroupCheck> groups;

    [[nodiscard]] bool passed() const { return covers && sizes_ok && distances_ok; }
};

/// Checks cover, group size <= r + delta - 1 and local distance >= delta.
/// Throws PreconditionError on an empty group list.
LocalityReport verify_locality(const LinearCode& code, const std::vector<Support>& groups, std::size_t r,
                               std::size_t delta);

struct DiscoveryOptions {
    /// Largest number of candidate supports examined before refusing.
    std::uint64_t budget = 4'000'000;
    unsigned threads = 1;
};

struct Discovery {
    /// Inclusion-minimal supports, sorted by size then lexicographically.
    std::vector<Support> groups;
    bool covers = false;
};

/// True when the restriction to `support` has distance >= delta and no zero coordinate.
bool is_repair_support(const LinearCode& code, const Support& support, std::size_t delta);

/// Enumerates supports of size delta .. r + delta - 1 bottom-up.
/// Throws CapExceeded when the number of candidates exceeds options.budget.
Discovery discover_repair_groups(const LinearCode& code, std::size_t r, std::size_t delta,
                                 const DiscoveryOptions& options = {});

/// Codewords of the dual supported inside `support`, as full-length rows.
Matrix dual_subcode(const LinearCode& code, const Support& support);

struct Chain {
    std::vector<Support> supports;
    /// Rows of each subcode (full length n).
    std::vector<Matrix> subcodes;
    /// Dimension of the sum space after each step.
    std::vector<std::size_t> running_dims;

    [[nodiscard]] std::size_t length() const { return supports.size(); }
};

/// Greedy maximal chain over `candidates`. Ties go to the lexicographically
/// smallest support; `seed` (if given) is taken first.
Chain build_chain(const LinearCode& code, std::size_t delta, const std::vector<Support>& candidates,
                  const std::optional<Support>& seed = std::nullopt);

/// Shortens on the union of the first floor((k-1)/r) chain supports.
/// Throws PreconditionError when the chain is shorter than that.
LinearCode residue_code(const LinearCode& code, const Chain& chain, std::size_t r);
Support residue_prefix_support(const Chain& chain, std::size_t count);

/// True iff every t-subset of [0, v) lies in exactly lambda groups.
bool design_check(const std::vector<Support>& groups, std::size_t t, std::size_t v, std::size_t lambda);
/// Number of groups containing each coordinate.
std::vector<std::size_t> replication_counts(const std::vector<Support>& groups, std::size_t v);

enum class Verdict { pass, fail, not_evaluated };
const char* to_string(Verdict v);

struct AssessOptions {
    /// Skips enumeration when the distance is known structurally.
    std::optional<std::size_t> distance;
    /// Skips discovery when the repair groups are known.
    std::optional<std::vector<Support>> groups;
    EnumerationOptions enumeration;
    DiscoveryOptions discovery;
    bool check_residue = true;
};

struct Assessment {
    LrcParams params;
    std::size_t bound = 0;
    /// bound - d; negative when the claimed locality cannot hold.
    long long singleton_gap = 0;
    std::size_t defect = 0;
    std::vector<Support> groups;
    LocalityReport locality;

    Verdict defect_bound = Verdict::not_evaluated;
    Verdict locality_bound = Verdict::not_evaluated;
    Verdict uniform_groups = Verdict::not_evaluated;
    Verdict group_sizes = Verdict::not_evaluated;
    Verdict disjoint_groups = Verdict::not_evaluated;
    Verdict local_mds = Verdict::not_evaluated;
    Verdict residue = Verdict::not_evaluated;
    std::optional<LinearCode> residue_code;
    std::vector<std::string> notes;

    [[nodiscard]] bool optimal() const { return singleton_gap == 0 && locality.passed(); }
    /// Optimal and no evaluated check failed.
    [[nodiscard]] bool passed() const;
};

Assessment verify_optimal(const LinearCode& code, std::size_t r, std::size_t delta,
                          const AssessOptions& options = {});

/// A received word; nullopt marks an erasure.
using ErasureWord = std::vector<std::optional<F4>>;

enum class RepairStatus { repaired_locally, repaired_globally, unrecoverable, inconsistent };
const char* to_string(RepairStatus s);

struct RepairResult {
    RepairStatus status = RepairStatus::unrecoverable;
    /// Fully filled only for the two repaired statuses.
    ErasureWord word;
    Support local;
    Support global;

    [[nodiscard]] bool ok() const {
        return status == RepairStatus::repaired_locally || status == RepairStatus::repaired_globally;
    }
    [[nodiscard]] Vector codeword() const;
};

/// Local solves over groups in listed order until no progress, then one global solve.
RepairResult repair_erasures(const LinearCode& code, const RepairGroupSet& groups, const ErasureWord& word);

}  // namespace lrc4
