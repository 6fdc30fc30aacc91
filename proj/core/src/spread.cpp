/**************************************************************************
 * spread.cpp
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
#include <array>
#include <cstdint>
#include <optional>

#include "lrc4/constructions.hpp"
#include "lrc4/error.hpp"

namespace lrc4 {

namespace {

constexpr std::size_t kGroupWidth = 6;
constexpr std::size_t kGlobalRows = 5;

std::string num(std::size_t x) { return std::to_string(x); }

// GF(16) = GF(4)[y] / (y^2 + y + a), element x0 + x1 y.
struct F16 {
    F4 x0, x1;
};

F16 mul16(F16 p, F16 q) {
    const F4 hi = p.x1 * q.x1;
    return {p.x0 * q.x0 + kAlpha * hi, p.x0 * q.x1 + p.x1 * q.x0 + hi};
}

bool in_set(const std::vector<Vector>& set, const Vector& v) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

// Lexicographically first Q in GL(3,4) whose inverse maps e3 into `targets`.
// With N = P Q the vector P e3 then has coordinates Q^{-1} e3 with respect to N.
std::optional<Matrix> first_basis_change(const std::vector<Vector>& targets) {
    const Vector e3{kZero, kZero, kOne};
    for (std::uint32_t code = 0; code < (1u << 18); ++code) {
        Matrix q(3, 3);
        for (std::size_t i = 0; i < 9; ++i) q.at(i / 3, i % 3) = F4::from_bits(static_cast<std::uint8_t>(code >> (2 * (8 - i))));
        if (rank(q) != 3) continue;
        const auto t = solve(q, e3);
        if (t && in_set(targets, *t)) return q;
    }
    return std::nullopt;
}

// Columns of the global block of group j (5 x 3).
Matrix tail_block(const Matrix& h, std::size_t ell, std::size_t j) {
    Matrix n(kGlobalRows, 3);
    for (std::size_t r = 0; r < kGlobalRows; ++r)
        for (std::size_t c = 0; c < 3; ++c) n.at(r, c) = h(3 * ell + r, kGroupWidth * j + 3 + c);
    return n;
}

}  // namespace

std::vector<Matrix> gf16_spread() {
    std::vector<Matrix> out;
    const F16 one{kOne, kZero};
    const F16 y{kZero, kOne};
    for (std::uint8_t l = 0; l < 16; ++l) {
        const F16 lambda{F4::from_bits(l & 3u), F4::from_bits(static_cast<std::uint8_t>(l >> 2))};
        const F16 p = mul16(lambda, one);
        const F16 q = mul16(lambda, y);
        out.push_back(Matrix{{kOne, kZero, p.x0, p.x1}, {kZero, kOne, q.x0, q.x1}});
    }
    out.push_back(Matrix{{kZero, kZero, kOne, kZero}, {kZero, kZero, kZero, kOne}});
    return out;
}

std::vector<Vector> hexacode_tails(std::size_t weight) {
    std::vector<Vector> out;
    for (const auto& w : codewords_of_weight(LinearCode::from_parity(h3x6()), weight)) {
        Vector tail{w[3], w[4], w[5]};
        if (!in_set(out, tail)) out.push_back(std::move(tail));
    }
    std::sort(out.begin(), out.end(), [](const Vector& a, const Vector& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](F4 x, F4 y) { return x.bits() < y.bits(); });
    });
    return out;
}

BuiltCode spread_construction_3_4_d12(std::size_t ell) {
    const char* anchor = "(3,4), d = 12 family, at most 21 groups";
    if (ell < 3) throw DomainError("ell >= 3 required, got ell=" + num(ell), anchor);
    if (ell > kProvenMaxGroups)
        throw DomainError("more than " + num(kProvenMaxGroups) + " groups is impossible, got ell=" + num(ell), anchor);
    if (ell > kSpreadMaxGroups)
        throw DomainError("18 to 21 groups is open; the spread gives at most " + num(kSpreadMaxGroups), anchor);

    const auto q = first_basis_change(hexacode_tails(6));
    if (!q) throw Error("spread construction: no local basis puts W inside the weight-6 tail set");

    const auto spread = gf16_spread();
    const std::size_t n = kGroupWidth * ell;
    Matrix h(3 * ell + kGlobalRows, n);
    const Matrix local = h3x6();
    std::vector<Support> groups;
    for (std::size_t j = 0; j < ell; ++j) {
        // P = [s1 s2 e5]: the spread member lifted into GF(4)^5 plus W = span(e5).
        Matrix p(kGlobalRows, 3);
        for (std::size_t r = 0; r < 4; ++r) {
            p.at(r, 0) = spread[j](0, r);
            p.at(r, 1) = spread[j](1, r);
        }
        p.at(4, 2) = kOne;
        const Matrix nj = multiply(p, *q);
        const std::size_t off = kGroupWidth * j;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < kGroupWidth; ++c) h.at(3 * j + r, off + c) = local(r, c);
        for (std::size_t r = 0; r < kGlobalRows; ++r)
            for (std::size_t c = 0; c < 3; ++c) h.at(3 * ell + r, off + 3 + c) = nj(r, c);
        Support g(kGroupWidth);
        for (std::size_t c = 0; c < kGroupWidth; ++c) g[c] = off + c;
        groups.push_back(std::move(g));
    }
    LinearCode code = LinearCode::from_parity(h);
    return BuiltCode{"large.spread34.l" + num(ell), std::move(h), MatrixKind::parity, std::move(code),
                     std::move(groups), 3, 4, 12};
}

SpreadCertificate certify_spread(const BuiltCode& code) {
    SpreadCertificate cert;
    const std::size_t ell = code.groups.size();
    cert.groups = ell;
    const Matrix& h = code.matrix;
    if (code.kind != MatrixKind::parity || h.cols() != kGroupWidth * ell || h.rows() != 3 * ell + kGlobalRows) {
        cert.failures.push_back("matrix is not in the block form of the spread construction");
        return cert;
    }
    if (ell > kProvenMaxGroups) cert.failures.push_back("more than " + num(kProvenMaxGroups) + " groups claimed");

    const auto u6 = hexacode_tails(6);
    const Matrix local = h3x6();

    cert.local_codes_ok = true;
    cert.tails_independent = true;
    std::vector<Matrix> tails;
    for (std::size_t j = 0; j < ell; ++j) {
        for (std::size_t r = 0; r < 3 * ell; ++r)
            for (std::size_t c = 0; c < h.cols(); ++c) {
                const bool in_block = r / 3 == j && c / kGroupWidth == j;
                if (r / 3 != j) continue;
                const F4 want = in_block ? local(r % 3, c % kGroupWidth) : kZero;
                if (h(r, c) != want) cert.local_codes_ok = false;
            }
        for (std::size_t r = 0; r < kGlobalRows; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                if (!h(3 * ell + r, kGroupWidth * j + c).is_zero()) cert.local_codes_ok = false;
        tails.push_back(tail_block(h, ell, j));
        if (rank(tails.back()) != 3) cert.tails_independent = false;
    }
    if (!is_mds(LinearCode::from_parity(local))) cert.local_codes_ok = false;
    if (!cert.local_codes_ok) cert.failures.push_back("local blocks are not the [6,3,4] parity check");
    if (!cert.tails_independent) cert.failures.push_back("some group has dependent tail columns");

    cert.intersections_ok = true;
    cert.pair_scan_ok = true;
    cert.min_pair_weight = 0;
    for (std::size_t j = 0; j < ell; ++j) {
        for (std::size_t m = j + 1; m < ell; ++m) {
            ++cert.pairs_checked;
            // Kernel of [N_j | N_m] describes V_j ∩ V_m.
            const Matrix ker = null_space(hstack(tails[j], tails[m]));
            bool ok = ker.rows() == 1;
            if (ok) {
                const Vector t{ker(0, 0), ker(0, 1), ker(0, 2)};
                const Vector s{ker(0, 3), ker(0, 4), ker(0, 5)};
                ok = in_set(u6, t) && in_set(u6, s);
            }
            if (!ok) {
                cert.intersections_ok = false;
                cert.failures.push_back("groups " + num(j + 1) + "," + num(m + 1) + ": intersection check failed");
            }

            std::vector<std::size_t> cols;
            for (std::size_t c = 0; c < kGroupWidth; ++c) cols.push_back(kGroupWidth * j + c);
            for (std::size_t c = 0; c < kGroupWidth; ++c) cols.push_back(kGroupWidth * m + c);
            const Matrix words = null_space(select_columns(h, cols));
            if (words.rows() == 0) continue;
            const auto dist = weight_distribution(LinearCode::from_generator_rows(words, cols.size()));
            const std::size_t w = dist.min_distance();
            if (cert.min_pair_weight == 0 || w < cert.min_pair_weight) cert.min_pair_weight = w;
            if (w < 12) {
                cert.pair_scan_ok = false;
                cert.failures.push_back("groups " + num(j + 1) + "," + num(m + 1) + ": word of weight " + num(w));
            }
        }
    }
    return cert;
}

}  // namespace lrc4
