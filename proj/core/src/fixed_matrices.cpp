/**************************************************************************
 * fixed_matrices.cpp
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
#include <set>

#include "lrc4/constructions.hpp"
#include "lrc4/error.hpp"
#include "lrc4/matrix_io.hpp"

namespace lrc4 {

namespace {

const std::vector<FixedMatrix> kFixed = {
#include "fixed_matrices_data.inc"
};

std::string num(std::size_t x) { return std::to_string(x); }

// Union of row supports for consecutive blocks of `rows_per_block` rows.
std::vector<Support> row_block_groups(const Matrix& h, std::size_t rows_per_block, std::size_t blocks) {
    std::vector<Support> groups;
    for (std::size_t b = 0; b < blocks; ++b) {
        std::set<std::size_t> cols;
        for (std::size_t r = b * rows_per_block; r < (b + 1) * rows_per_block; ++r)
            for (std::size_t c = 0; c < h.cols(); ++c)
                if (!h(r, c).is_zero()) cols.insert(c);
        groups.emplace_back(cols.begin(), cols.end());
    }
    return groups;
}

std::vector<Support> discovered(const LinearCode& code, std::size_t r, std::size_t delta) {
    return discover_repair_groups(code, r, delta).groups;
}

BuiltCode from_parity_blocks(std::string name, const Matrix& h, std::size_t r, std::size_t delta,
                             std::size_t blocks, std::size_t d) {
    auto groups = row_block_groups(h, delta - 1, blocks);
    LinearCode code = LinearCode::from_parity(h);
    return BuiltCode{std::move(name), h, MatrixKind::parity, std::move(code), std::move(groups), r, delta, d};
}

BuiltCode from_generator_discovered(std::string name, const Matrix& g, std::size_t r, std::size_t delta,
                                    std::size_t d) {
    LinearCode code = LinearCode::from_generator(g);
    auto groups = discovered(code, r, delta);
    return BuiltCode{std::move(name), g, MatrixKind::generator, std::move(code), std::move(groups), r, delta, d};
}

// Punctures a parity-defined code and re-discovers its groups; the stored matrix is a generator.
BuiltCode punctured(std::string name, const LinearCode& base, const Support& positions, std::size_t r,
                    std::size_t delta, std::size_t d) {
    LinearCode code = puncture(base, positions);
    auto groups = discovered(code, r, delta);
    Matrix g = code.generator();
    return BuiltCode{std::move(name), std::move(g), MatrixKind::generator, std::move(code), std::move(groups),
                     r, delta, d};
}

Support positions_from(std::initializer_list<std::size_t> one_based) { return from_one_based(one_based); }

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const std::vector<FixedMatrix>& fixed_matrices() { return kFixed; }

Matrix fixed_matrix(std::string_view name) {
    for (const auto& f : kFixed) {
        if (f.name != name) continue;
        if (fnv1a64(f.text) != f.checksum) throw Error("checksum mismatch for fixed matrix '" + std::string(name) + "'");
        return import_matrix(f.text);
    }
    throw PreconditionError("unknown fixed matrix '" + std::string(name) + "'");
}

Matrix g17() { return fixed_matrix("g17"); }
Matrix g16() { return fixed_matrix("g16"); }
Matrix g21() { return fixed_matrix("g21"); }

Poly4 bch17_generator_poly() {
    const F256 gamma = f256_seventeenth_root();
    std::vector<Poly4> factors;
    for (int i = -5; i <= 5; ++i) {
        Poly4 m = minimal_poly_over_f4(gamma.pow(i));
        if (std::find(factors.begin(), factors.end(), m) == factors.end()) factors.push_back(std::move(m));
    }
    Poly4 g{kOne};
    for (const auto& f : factors) g = poly_mul(g, f);
    return g;
}

LinearCode bch_c17() {
    const Poly4 g = bch17_generator_poly();
    const std::size_t n = 17;
    const std::size_t k = n - (g.size() - 1);
    Matrix gen(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < g.size(); ++j) gen.at(i, i + j) = g[j];
    return LinearCode::from_generator(gen);
}

const std::vector<TableRow>& puncture_table(TableBase base) {
    static const std::vector<TableRow> c17 = {
        {17, 4, 12, {}},
        {16, 4, 11, {17}},
        {15, 4, 10, {16, 17}},
        {14, 4, 9, {15, 16, 17}},
        {13, 4, 8, {14, 15, 16, 17}},
        {12, 4, 7, {13, 14, 15, 16, 17}},
        {11, 4, 6, {12, 13, 14, 15, 16, 17}},
        {10, 4, 5, {5, 6, 9, 11, 12, 13, 17}},
    };
    static const std::vector<TableRow> c16 = {
        {16, 3, 12, {}},
        {15, 3, 11, {1}},
        {14, 3, 10, {1, 2}},
        {13, 3, 9, {1, 2, 3}},
        {12, 3, 8, {1, 2, 3, 4}},
        {11, 3, 7, {1, 2, 3, 4, 5}},
        {10, 3, 6, {1, 2, 3, 4, 5, 8}},
        // The printed pattern lists six positions; 4 is the only completion giving an optimal code.
        {9, 3, 5, {1, 2, 3, 4, 10, 12, 16}},
    };
    static const std::vector<TableRow> c21 = {
        {21, 3, 16, {}},
        {20, 3, 15, {1}},
        {19, 3, 14, {1, 2}},
        {18, 3, 13, {11, 14, 20}},
        {17, 3, 12, {11, 13, 14, 20}},
        {16, 3, 11, {2, 4, 10, 12, 20}},
        {15, 3, 10, {10, 11, 14, 15, 19, 21}},
        {14, 3, 9, {9, 10, 11, 14, 15, 19, 21}},
        {13, 3, 8, {10, 11, 13, 14, 16, 18, 19, 20}},
        {12, 3, 7, {9, 10, 11, 14, 15, 16, 19, 20, 21}},
    };
    switch (base) {
        case TableBase::c17: return c17;
        case TableBase::c16: return c16;
        case TableBase::c21: return c21;
    }
    return c17;
}

std::pair<std::size_t, std::size_t> table_locality(TableBase base) {
    switch (base) {
        case TableBase::c17: return {3, 3};
        case TableBase::c16: return {2, 3};
        case TableBase::c21: return {2, 4};
    }
    return {0, 0};
}

const char* to_string(TableBase base) {
    switch (base) {
        case TableBase::c17: return "c17";
        case TableBase::c16: return "c16";
        case TableBase::c21: return "c21";
    }
    return "?";
}

BuiltCode table_puncture_family(TableBase base, std::size_t target_n) {
    const auto& rows = puncture_table(base);
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const TableRow& t) { return t.n == target_n; });
    if (it == rows.end())
        throw DomainError("n must be in " + num(rows.back().n) + ".." + num(rows.front().n) + ", got n=" + num(target_n),
                          std::string("puncture table for ") + to_string(base));
    const Matrix g = base == TableBase::c17 ? g17() : base == TableBase::c16 ? g16() : g21();
    const auto [r, delta] = table_locality(base);
    const LinearCode full = LinearCode::from_generator(g);
    LinearCode code = it->positions.empty() ? full : puncture(full, from_one_based(it->positions));
    auto groups = discovered(code, r, delta);
    Matrix gen = code.generator();
    return BuiltCode{std::string("k_r1.") + to_string(base) + ".n" + num(target_n),
                     std::move(gen),
                     MatrixKind::generator,
                     std::move(code),
                     std::move(groups),
                     r,
                     delta,
                     it->d};
}

const std::vector<FixedCodeSpec>& fixed_code_specs() {
    static const std::vector<FixedCodeSpec> specs = {
        {"c9", 9, 5, 3, 3, 3},
        {"c18", 18, 4, 12, 3, 4},
        {"c18_minus4", 14, 4, 8, 3, 4},
        {"c18_minus6", 12, 4, 6, 3, 4},
        {"h16", 16, 4, 10, 3, 4},
        {"h17", 17, 4, 11, 3, 4},
        {"h15", 15, 4, 9, 3, 4},
        {"h13", 13, 4, 7, 3, 4},
        {"g17", 17, 4, 12, 3, 3},
        {"g16", 16, 3, 12, 2, 3},
        {"c21", 21, 3, 16, 2, 4},
        {"d8_five_groups", 20, 7, 8, 2, 3},
        {"d12_2_3_five_groups", 20, 5, 12, 2, 3},
        {"d9_example", 20, 7, 9, 3, 3},
        {"d12_3_4_matrix", 18, 4, 12, 3, 4},
    };
    return specs;
}

BuiltCode fixed_matrix_code(std::string_view name) {
    const auto& specs = fixed_code_specs();
    const auto it = std::find_if(specs.begin(), specs.end(), [&](const FixedCodeSpec& s) { return s.name == name; });
    if (it == specs.end()) throw PreconditionError("unknown fixed code '" + std::string(name) + "'");
    const FixedCodeSpec& s = *it;
    const std::string id(name);

    if (id == "c9") return from_parity_blocks(id, fixed_matrix("c9"), s.r, s.delta, 2, s.d);
    if (id == "c18") return from_parity_blocks(id, fixed_matrix("c18"), s.r, s.delta, 3, s.d);
    if (id == "c18_minus4")
        return punctured(id, LinearCode::from_parity(fixed_matrix("c18")), positions_from({13, 14, 15, 17}), s.r,
                         s.delta, s.d);
    if (id == "c18_minus6")
        return punctured(id, LinearCode::from_parity(fixed_matrix("c18")), positions_from({13, 14, 15, 16, 17, 18}),
                         s.r, s.delta, s.d);
    if (id == "h16") return from_parity_blocks(id, fixed_matrix("h16"), s.r, s.delta, 3, s.d);
    if (id == "h17") return from_parity_blocks(id, fixed_matrix("h17"), s.r, s.delta, 4, s.d);
    if (id == "h15") return from_parity_blocks(id, fixed_matrix("h15"), s.r, s.delta, 4, s.d);
    if (id == "h13") {
        // First nine rows and thirteen columns of h17.
        const Matrix h17 = fixed_matrix("h17");
        std::vector<std::size_t> rows(9), cols(13);
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
        for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
        return from_parity_blocks(id, select_columns(select_rows(h17, rows), cols), s.r, s.delta, 3, s.d);
    }
    if (id == "g17") return from_generator_discovered(id, g17(), s.r, s.delta, s.d);
    if (id == "g16") return from_generator_discovered(id, g16(), s.r, s.delta, s.d);
    if (id == "c21") return from_generator_discovered(id, g21(), s.r, s.delta, s.d);
    if (id == "d8_five_groups") return d8_2_3_family(5);
    if (id == "d12_2_3_five_groups") return d12_2_3_family(5);
    if (id == "d9_example") return from_parity_blocks(id, fixed_matrix("d9_example"), s.r, s.delta, 4, s.d);
    if (id == "d12_3_4_matrix") {
        BuiltCode b = spread_construction_3_4_d12(3);
        b.name = id;
        return b;
    }
    throw PreconditionError("unknown fixed code '" + id + "'");
}

std::vector<BuiltCode> fixed_matrix_codes() {
    std::vector<BuiltCode> out;
    for (const auto& s : fixed_code_specs()) out.push_back(fixed_matrix_code(s.name));
    return out;
}

}  // namespace lrc4
