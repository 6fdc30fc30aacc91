/**************************************************************************
 * catalog.hpp
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

#include <optional>
#include <string>
#include <vector>

#include "lrc4/constructions.hpp"

namespace lrc4 {

enum class VerificationMode { exhaustive, structural, fixed_matrix };
enum class EntryStatus { constructive, open, nonexistent };

const char* to_string(VerificationMode m);
const char* to_string(EntryStatus s);

struct CatalogEntry {
    std::string id;
    std::size_t r = 0;
    /// nullopt for the r = 1 rows, where delta >= 3 is a parameter.
    std::optional<std::size_t> delta;
    /// Fixed distance, if the row has one.
    std::optional<std::size_t> d;
    /// For the r = 1 rows: d = d_per_delta * delta.
    std::size_t d_per_delta = 0;
    /// Lowest and highest d over the row, for rows where d varies with n.
    std::size_t d_min = 0;
    std::size_t d_max = 0;
    std::string n_formula;
    std::string k_formula;
    std::string d_formula;
    std::string domain;
    std::string anchor;
    VerificationMode mode = VerificationMode::exhaustive;
    EntryStatus status = EntryStatus::constructive;
    std::string note;
};

struct CatalogFilter {
    std::optional<std::size_t> r;
    std::optional<std::size_t> delta;
    std::optional<std::size_t> d;
    /// With any filter set, open / nonexistent entries are listed only when true.
    bool include_verdicts = false;
};

/// Entries in parameter-table order; verdict entries follow the row they refine.
const std::vector<CatalogEntry>& catalog_entries();
std::vector<CatalogEntry> catalog_list(const CatalogFilter& filter = {});
/// Throws PreconditionError for an unknown id.
const CatalogEntry& catalog_entry(const std::string& id);

struct ConstructParams {
    std::optional<std::size_t> l;
    std::optional<std::size_t> k;
    std::optional<std::size_t> e;
    std::optional<std::size_t> n;
    std::optional<std::size_t> delta;
};

struct ConstructResult {
    /// Set when the family is constructive for these parameters.
    std::optional<BuiltCode> code;
    EntryStatus status = EntryStatus::constructive;
    std::string verdict;
    std::string anchor;
};

/// Dispatches to the builders. Throws DomainError when params violate the entry's domain.
ConstructResult construct(const std::string& id, const ConstructParams& params);

/// Smallest admissible parameters of a constructive entry.
ConstructParams smallest_params(const CatalogEntry& entry);

}  // namespace lrc4
