/**************************************************************************
 * large_families.cpp
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
#include <cstdint>
#include <set>

#include "lrc4/constructions.hpp"
#include "lrc4/error.hpp"

namespace lrc4 {

namespace {

constexpr std::size_t kWidth = 4;
constexpr std::size_t kFullGroups = 5;

std::string num(std::size_t x) { return std::to_string(x); }

std::uint64_t key(const Vector& v) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < v.size(); ++i) k |= std::uint64_t{v[i].bits()} << (2 * i);
    return k;
}

Vector combine(const std::vector<Vector>& basis, const Vector& coeffs) {
    Vector out(basis.front().size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += coeffs[i] * basis[i][c];
    return out;
}

// All vectors in the span of `basis`.
std::set<std::uint64_t> span_keys(const std::vector<Vector>& basis) {
    std::set<std::uint64_t> out;
    const std::size_t total = std::size_t{1} << (2 * basis.size());
    for (std::size_t m = 0; m < total; ++m) {
        Vector coeffs(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] = F4::from_bits(static_cast<std::uint8_t>(m >> (2 * i)));
        out.insert(key(combine(basis, coeffs)));
    }
    return out;
}

// Keeps the first `ell` blocks of a five-block matrix with `global_rows` trailing rows.
Matrix keep_blocks(const Matrix& h, std::size_t ell, std::size_t global_rows) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < 2 * ell; ++r) rows.push_back(r);
    for (std::size_t r = 0; r < global_rows; ++r) rows.push_back(2 * kFullGroups + r);
    for (std::size_t c = 0; c < kWidth * ell; ++c) cols.push_back(c);
    return select_columns(select_rows(h, rows), cols);
}

BuiltCode five_group_family(const char* prefix, const char* fixed, std::size_t ell, std::size_t global_rows,
                            std::size_t d) {
    const Matrix h = keep_blocks(fixed_matrix(fixed), ell, global_rows);
    std::vector<Support> groups;
    for (std::size_t j = 0; j < ell; ++j) groups.push_back({kWidth * j, kWidth * j + 1, kWidth * j + 2, kWidth * j + 3});
    LinearCode code = LinearCode::from_parity(h);
    return BuiltCode{std::string(prefix) + ".l" + num(ell), h, MatrixKind::parity, std::move(code), std::move(groups),
                     2, 3, d};
}

struct TailData {
    TailCriteria out;
    std::vector<std::set<std::uint64_t>> spans;
    std::vector<std::set<std::uint64_t>> forbidden;
};

TailData tail_data(const BuiltCode& code) {
    const Matrix& h = code.matrix;
    const std::size_t ell = code.groups.size();
    if (code.kind != MatrixKind::parity || h.cols() != kWidth * ell || h.rows() <= 2 * ell)
        throw PreconditionError("tail criteria need a block parity matrix with 4-column groups");
    const std::size_t g0 = 2 * ell;
    const std::size_t gr = h.rows() - g0;

    TailData t;
    // Tails of weight-3 words of the first local code.
    const Matrix local = select_columns(select_rows(h, std::vector<std::size_t>{0, 1}),
                                        std::vector<std::size_t>{0, 1, 2, 3});
    std::set<std::uint64_t> seen;
    for (const auto& w : codewords_of_weight(LinearCode::from_parity(local), 3)) {
        Vector tail{w[2], w[3]};
        if (seen.insert(key(tail)).second) t.out.u3.push_back(tail);
    }

    // Nonzero tails outside U3 must form one projective point.
    std::vector<Vector> outside;
    for (std::uint8_t x = 1; x < 16; ++x) {
        Vector c{F4::from_bits(x & 3u), F4::from_bits(static_cast<std::uint8_t>(x >> 2))};
        if (!seen.count(key(c))) outside.push_back(c);
    }
    bool point = outside.size() == 3;
    if (point) {
        const auto line = span_keys({outside.front()});
        for (const auto& c : outside) point = point && line.count(key(c));
        t.out.complement_coeffs = outside.front();
    }

    t.out.independent = true;
    t.out.complement_line = point;
    for (std::size_t j = 0; j < ell; ++j) {
        Vector u(gr), v(gr);
        for (std::size_t r = 0; r < gr; ++r) {
            u[r] = h(g0 + r, kWidth * j + 2);
            v[r] = h(g0 + r, kWidth * j + 3);
        }
        t.out.tails.push_back({u, v});
        if (rank(Matrix::from_rows({u, v}, gr)) != 2) t.out.independent = false;

        std::set<std::uint64_t> a;
        for (const auto& c : t.out.u3) a.insert(key(combine({u, v}, c)));
        const auto vs = span_keys({u, v});
        std::set<std::uint64_t> rest;
        for (auto x : vs)
            if (!a.count(x)) rest.insert(x);
        if (point && rest != span_keys({combine({u, v}, t.out.complement_coeffs)})) t.out.complement_line = false;
        t.spans.push_back(vs);
        t.forbidden.push_back(std::move(a));
    }
    return t;
}

bool disjoint(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    for (auto x : a)
        if (b.count(x)) return false;
    return true;
}

}  // namespace

BuiltCode d8_2_3_family(std::size_t ell) {
    if (ell < 3 || ell > 5) throw DomainError("ell must be 3, 4 or 5, got ell=" + num(ell), "(2,3), d = 8 family");
    return five_group_family("large.d8r2", "d8_five_groups", ell, 3, 8);
}

BuiltCode d12_2_3_family(std::size_t ell) {
    if (ell < 4 || ell > 5) throw DomainError("ell must be 4 or 5, got ell=" + num(ell), "(2,3), d = 12 family");
    return five_group_family("large.d12r2", "d12_2_3_five_groups", ell, 5, 12);
}

TailCriteria d8_criteria(const BuiltCode& code) {
    TailData t = tail_data(code);
    t.out.pairwise = true;
    for (std::size_t j = 0; j < t.spans.size(); ++j)
        for (std::size_t m = 0; m < t.spans.size(); ++m)
            if (j != m && !disjoint(t.forbidden[j], t.spans[m])) t.out.pairwise = false;
    return t.out;
}

TailCriteria d12_criteria(const BuiltCode& code) {
    TailData t = tail_data(code);
    const std::size_t ell = t.spans.size();
    t.out.pairwise = true;
    for (std::size_t j = 0; j < ell; ++j)
        for (std::size_t m = j + 1; m < ell; ++m) {
            const auto& a = t.out.tails[j];
            const auto& b = t.out.tails[m];
            if (rank(Matrix::from_rows({a[0], a[1], b[0], b[1]}, a[0].size())) != 4) t.out.pairwise = false;
        }
    for (std::size_t j1 = 0; j1 < ell; ++j1)
        for (std::size_t j2 = 0; j2 < ell; ++j2)
            for (std::size_t j3 = j2 + 1; j3 < ell; ++j3) {
                if (j1 == j2 || j1 == j3) continue;
                const auto& b = t.out.tails[j2];
                const auto& c = t.out.tails[j3];
                if (!disjoint(t.forbidden[j1], span_keys({b[0], b[1], c[0], c[1]}))) t.out.pairwise = false;
            }
    return t.out;
}

}  // namespace lrc4
