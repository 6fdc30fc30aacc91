/**************************************************************************
 * constructions.hpp
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
#include <string_view>
#include <vector>

#include "lrc4/linear_code.hpp"
#include "lrc4/lrc.hpp"

namespace lrc4 {

enum class MatrixKind { parity, generator };

/// A constructed code with the locality it was built for.
struct BuiltCode {
    std::string name;
    /// The matrix as emitted by the construction (not reduced).
    Matrix matrix;
    MatrixKind kind = MatrixKind::parity;
    LinearCode code;
    /// Declared repair groups (0-based supports).
    std::vector<Support> groups;
    std::size_t r = 0;
    std::size_t delta = 0;
    /// The distance the construction targets.
    std::size_t design_distance = 0;
};

// ---- small fixed local matrices ----

/// [I_{delta-1} | 1]: parity check of the length-delta repetition code.
Matrix h_delta(std::size_t delta);
Matrix h2x4();
Matrix h2x5();
Matrix g3x5();
Matrix h3x6();
/// 3 x 5 parity check of the [5,2,4] code; first two rows give a [5,3,3] code.
Matrix mds524_parity();
/// 3 x 6 parity check of the [6,3,4] hexacode used for the d = 4 families.
Matrix mds634_parity();
/// Local/global split used by the d = 5 (3,3) tensor family.
Matrix gtp33_local();
/// First row differs from the printed split in entry (0,0); see gtp33_printed_global().
Matrix gtp33_global();
/// The split as printed: [B1; B2] is then a [5,1,4] code and the family only reaches d = 4.
Matrix gtp33_printed_global();
/// Local/global split used by the d = 6 (3,4) tensor family.
Matrix gtp34_local();
Matrix gtp34_global();

// ---- generalized tensor product ----

struct GtpSpec {
    std::size_t ell = 0;
    /// (delta-1) x (r+delta-1)
    Matrix b1;
    /// mu x ell
    Matrix a2;
    /// nu x (r+delta-1)
    Matrix b2;

    [[nodiscard]] std::size_t delta() const { return b1.rows() + 1; }
    [[nodiscard]] std::size_t r() const { return b1.cols() - b1.rows(); }
    [[nodiscard]] std::size_t mu() const { return a2.rows(); }
    [[nodiscard]] std::size_t nu() const { return b2.rows(); }
};

/// [I_ell (x) B1 ; A2 (x) B2], no checks.
Matrix gtp_parity(const GtpSpec& spec);
/// Throws PreconditionError naming the failed check. With require_stacked_mds = false the
/// [B1; B2] condition is skipped (the (3,3), d = 5 split stacks to a non-MDS [5,1,4] code).
void check_gtp_preconditions(const GtpSpec& spec, bool require_stacked_mds = true);
/// True when [B1; B2] satisfies its MDS (or invertibility) condition.
bool gtp_stacked_condition(const GtpSpec& spec);
std::size_t gtp_dimension(const GtpSpec& spec);
/// delta(mu+1) when r == nu, else min(delta(mu+1), delta+nu).
std::size_t gtp_distance_bound(const GtpSpec& spec);
LinearCode gtp(const GtpSpec& spec);
/// 1 x ell all-ones row.
Matrix ones_row(std::size_t ell);

GtpSpec d4_23_spec(std::size_t ell);
GtpSpec d4_33_spec(std::size_t ell);
GtpSpec gtp33_spec(std::size_t ell);
GtpSpec gtp34_spec(std::size_t ell);

struct NamedGtpSpec {
    std::string family;
    GtpSpec spec;
    /// Minimum distance of the family.
    std::size_t distance = 0;
};
/// Every tensor-product spec used by the catalog, at `ell` groups.
std::vector<NamedGtpSpec> gtp_family_specs(std::size_t ell);

// ---- families with d <= 4 or r = 1 ----

/// n = (k+e)delta, d = (e+1)delta. Throws DomainError outside the admissible range.
BuiltCode r1_family(std::size_t k, std::size_t delta, std::size_t e);
/// d = 3, delta = 3, r in {2,3}: n = (r+2)ell - e, k = r ell - e.
BuiltCode d3_family(std::size_t r, std::size_t ell, std::size_t e);
/// d = 4. (r,delta) in {(2,3),(3,3),(2,4),(3,4)}; e as in the parameter table.
BuiltCode d4_family(std::size_t r, std::size_t delta, std::size_t ell, std::size_t e);

// ---- k = r + 1 ----

Matrix g17();
Matrix g16();
Matrix g21();
/// Generator polynomial of the length-17 BCH code with zeros gamma^-5 .. gamma^5.
Poly4 bch17_generator_poly();
LinearCode bch_c17();

enum class TableBase { c17, c16, c21 };
struct TableRow {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    /// 1-based positions to puncture.
    std::vector<std::size_t> positions;
};
const std::vector<TableRow>& puncture_table(TableBase base);
/// Locality of the punctured family: (3,3) for c17, (2,3) for c16, (2,4) for c21.
std::pair<std::size_t, std::size_t> table_locality(TableBase base);
const char* to_string(TableBase base);
BuiltCode table_puncture_family(TableBase base, std::size_t target_n);

/// Fixed matrices stored verbatim as text with an FNV-1a checksum.
struct FixedMatrix {
    std::string_view name;
    MatrixKind kind;
    std::string_view text;
    std::uint64_t checksum;
};
const std::vector<FixedMatrix>& fixed_matrices();
std::uint64_t fnv1a64(std::string_view text);
/// Parsed matrix; throws Error when the stored checksum does not match.
Matrix fixed_matrix(std::string_view name);

struct FixedCodeSpec {
    std::string name;
    std::size_t n, k, d;
    /// Locality the code is documented with.
    std::size_t r, delta;
};
/// The named fixed-matrix codes with their documented parameters.
const std::vector<FixedCodeSpec>& fixed_code_specs();
BuiltCode fixed_matrix_code(std::string_view name);
std::vector<BuiltCode> fixed_matrix_codes();

// ---- k >= r + 2 ----

/// (2,3), d = 8, ell in {3,4,5}: n = 4 ell, k = 2 ell - 3.
BuiltCode d8_2_3_family(std::size_t ell);
/// (2,3), d = 12, ell in {4,5}: n = 4 ell, k = 2 ell - 5.
BuiltCode d12_2_3_family(std::size_t ell);
/// (3,3), d = 5 tensor family: n = 5 ell, k = 3 ell - 2.
BuiltCode gtp33_family(std::size_t ell);
/// (3,4), d = 6 tensor family: n = 6 ell, k = 3 ell - 2.
BuiltCode gtp34_family(std::size_t ell);

/// Tails (u_j, v_j) of the five-group (2,3) matrices and their forbidden sets.
struct TailCriteria {
    /// Tail columns per group, each of the global-row dimension.
    std::vector<std::vector<Vector>> tails;
    /// Projections of weight-3 local codewords onto the tail coordinates.
    std::vector<Vector> u3;
    bool independent = false;
    /// Criterion (ii) for d = 8 or (ii)+(iii) for d = 12.
    bool pairwise = false;
    /// (phi, theta) spanning the nonzero tails outside U3 (the weight-4 local tails).
    Vector complement_coeffs;
    /// V_j minus A_j equals span(phi u_j + theta v_j) for every j.
    bool complement_line = false;
};
TailCriteria d8_criteria(const BuiltCode& code);
TailCriteria d12_criteria(const BuiltCode& code);

// ---- (3,4), d = 12 spread construction ----

inline constexpr std::size_t kSpreadMaxGroups = 17;
inline constexpr std::size_t kProvenMaxGroups = 21;

/// The 17 two-dimensional members of the field spread of GF(4)^4, as 2 x 4 bases.
std::vector<Matrix> gf16_spread();

/// Tail projections onto coordinates 4..6 of the weight-a hexacode words.
std::vector<Vector> hexacode_tails(std::size_t weight);

struct SpreadCertificate {
    std::size_t groups = 0;
    bool tails_independent = false;
    /// Pairs checked for dim(V_j ∩ V_m) = 1 inside A(6)_j ∩ A(6)_m.
    std::size_t pairs_checked = 0;
    bool intersections_ok = false;
    /// Pairs whose 12-coordinate null space has no nonzero word of weight < 12.
    bool pair_scan_ok = false;
    std::size_t min_pair_weight = 0;
    bool local_codes_ok = false;
    std::vector<std::string> failures;

    [[nodiscard]] bool passed() const {
        return tails_independent && intersections_ok && pair_scan_ok && local_codes_ok && failures.empty();
    }
};

/// n = 6 ell, k = 3 ell - 5, d = 12 for 3 <= ell <= 17.
/// Throws DomainError above 17 groups (open up to 21, impossible beyond).
BuiltCode spread_construction_3_4_d12(std::size_t ell);
SpreadCertificate certify_spread(const BuiltCode& code);

}  // namespace lrc4
