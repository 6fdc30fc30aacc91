/**************************************************************************
 * families.cpp
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
#include <string>

#include "lrc4/constructions.hpp"
#include "lrc4/error.hpp"

namespace lrc4 {

namespace {

constexpr F4 O = kZero;
constexpr F4 I = kOne;
constexpr F4 A = kAlpha;
constexpr F4 B = kBeta;

std::string num(std::size_t x) { return std::to_string(x); }

// Block offsets when blocks `pair` and `pair + 1` share `overlap` columns.
std::vector<std::size_t> block_offsets(std::size_t ell, std::size_t width, std::size_t pair, std::size_t overlap) {
    std::vector<std::size_t> off(ell, 0);
    for (std::size_t j = 1; j < ell; ++j) off[j] = off[j - 1] + width - (j - 1 == pair ? overlap : 0);
    return off;
}

// Stacks `local` at each offset, then one copy of `global` per block summed over overlaps.
Matrix place_blocks(const Matrix& local, const Matrix& global, const std::vector<std::size_t>& off, std::size_t n) {
    const std::size_t lr = local.rows();
    Matrix h(off.size() * lr + global.rows(), n);
    for (std::size_t j = 0; j < off.size(); ++j) {
        for (std::size_t r = 0; r < lr; ++r)
            for (std::size_t c = 0; c < local.cols(); ++c) h.at(j * lr + r, off[j] + c) = local(r, c);
        for (std::size_t r = 0; r < global.rows(); ++r)
            for (std::size_t c = 0; c < global.cols(); ++c) h.at(off.size() * lr + r, off[j] + c) += global(r, c);
    }
    return h;
}

std::vector<Support> block_supports(const std::vector<std::size_t>& off, std::size_t width) {
    std::vector<Support> g;
    for (auto o : off) {
        Support s(width);
        for (std::size_t c = 0; c < width; ++c) s[c] = o + c;
        g.push_back(std::move(s));
    }
    return g;
}

BuiltCode finish(std::string name, Matrix h, std::vector<Support> groups, std::size_t r, std::size_t delta,
                 std::size_t d) {
    LinearCode code = LinearCode::from_parity(h);
    return BuiltCode{std::move(name), std::move(h), MatrixKind::parity, std::move(code), std::move(groups),
                     r, delta, d};
}

Matrix rows_of(const Matrix& m, std::size_t first, std::size_t count) {
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = first + i;
    return select_rows(m, idx);
}

}  // namespace

Matrix h_delta(std::size_t delta) {
    if (delta < 2) throw PreconditionError("h_delta requires delta >= 2");
    Matrix h(delta - 1, delta);
    for (std::size_t i = 0; i + 1 < delta; ++i) {
        h.at(i, i) = kOne;
        h.at(i, delta - 1) = kOne;
    }
    return h;
}

Matrix h2x4() { return {{I, O, I, I}, {O, I, B, A}}; }
Matrix h2x5() { return {{I, O, I, I, I}, {O, I, I, A, B}}; }
Matrix g3x5() { return {{I, I, I, O, O}, {I, A, O, I, O}, {I, B, O, O, I}}; }
Matrix h3x6() { return {{I, O, O, I, I, I}, {O, I, O, I, A, B}, {O, O, I, I, B, A}}; }
Matrix mds524_parity() { return {{I, I, I, I, O}, {O, I, A, B, I}, {O, I, B, A, O}}; }
Matrix mds634_parity() { return {{I, I, I, I, O, O}, {O, I, A, B, I, O}, {O, I, B, A, O, I}}; }
Matrix gtp33_local() { return {{I, I, I, I, O}, {O, I, A, B, I}}; }
Matrix gtp33_global() { return {{A, I, B, A, O}, {O, I, I, I, I}}; }
Matrix gtp33_printed_global() { return {{O, I, B, A, O}, {O, I, I, I, I}}; }
Matrix gtp34_local() { return h3x6(); }
Matrix gtp34_global() { return {{I, A, B, I, A, B}, {I, B, B, A, A, I}}; }

BuiltCode r1_family(std::size_t k, std::size_t delta, std::size_t e) {
    const char* anchor = "r = 1 rows of the parameter table";
    if (delta < 3) throw DomainError("delta >= 3 required, got delta=" + num(delta), anchor);
    if (k < 2) throw DomainError("k >= 2 required, got k=" + num(k), anchor);
    if (e > 3) throw DomainError("excess e must be 0, 1, 2 or 3, got e=" + num(e), anchor);
    if (e >= 2 && k > 3)
        throw DomainError(e == 2 ? "e=2 allows at most 5 groups (5 points of the projective line): k in {2,3}"
                                 : "e=3 allows at most 6 groups ([6,3] MDS tail cap): k in {2,3}",
                          anchor);

    const std::size_t ell = k + e;
    const std::size_t n = ell * delta;
    const std::string name = "r1.e" + num(e) + ".k" + num(k) + ".delta" + num(delta);
    const auto off = block_offsets(ell, delta, 0, 0);
    const Matrix hd = h_delta(delta);

    Matrix global(0, delta);
    if (e == 1) {
        global = Matrix(1, delta);
        global.at(0, delta - 1) = kOne;
    }
    Matrix h = place_blocks(hd, global, off, n);

    if (e >= 2) {
        // Tail column per block: distinct projective points (e = 2) or an MDS [6,3] column set (e = 3).
        static const std::vector<Vector> points2{{I, O}, {I, I}, {I, A}, {I, B}, {O, I}};
        static const std::vector<Vector> points3{{I, O, O}, {I, I, I}, {I, A, B}, {I, B, A}, {O, O, I}, {O, I, O}};
        const auto& pts = e == 2 ? points2 : points3;
        Matrix tails(e, n);
        for (std::size_t j = 0; j < ell; ++j)
            for (std::size_t r = 0; r < e; ++r) tails.at(r, off[j] + delta - 1) = pts[j][r];
        h = vstack(h, tails);
    }
    return finish(name, std::move(h), block_supports(off, delta), 1, delta, (e + 1) * delta);
}

GtpSpec d4_23_spec(std::size_t ell) { return {ell, {{I, I, I, I}, {O, I, A, B}}, ones_row(ell), {{O, I, B, A}}}; }

GtpSpec d4_33_spec(std::size_t ell) {
    const Matrix bm = mds524_parity();
    return {ell, rows_of(bm, 0, 2), ones_row(ell), rows_of(bm, 2, 1)};
}

GtpSpec gtp33_spec(std::size_t ell) { return {ell, gtp33_local(), ones_row(ell), gtp33_global()}; }
GtpSpec gtp34_spec(std::size_t ell) { return {ell, gtp34_local(), ones_row(ell), gtp34_global()}; }

std::vector<NamedGtpSpec> gtp_family_specs(std::size_t ell) {
    return {{"d4.r2delta3", d4_23_spec(ell), 4},
            {"d4.r3delta3", d4_33_spec(ell), 4},
            {"large.gtp33", gtp33_spec(ell), 5},
            {"large.gtp34", gtp34_spec(ell), 6}};
}

BuiltCode d3_family(std::size_t r, std::size_t ell, std::size_t e) {
    const char* anchor = "d = 3 rows of the parameter table";
    if (r != 2 && r != 3) throw DomainError("r must be 2 or 3 for d = 3, got r=" + num(r), anchor);
    if (ell < 2) throw DomainError("ell >= 2 required, got ell=" + num(ell), anchor);
    if (e > r - 1) throw DomainError("e must be at most " + num(r - 1) + " for r=" + num(r), anchor);
    const Matrix local = r == 2 ? Matrix{{O, I, I, I}, {I, O, I, A}} : Matrix{{O, I, I, I, I}, {I, O, I, A, B}};
    const std::size_t w = r + 2;
    const auto off = block_offsets(ell, w, 0, e);
    const std::size_t n = ell * w - e;
    const std::string name = "d3.r" + num(r) + ".l" + num(ell) + ".e" + num(e);
    return finish(name, place_blocks(local, Matrix(0, w), off, n), block_supports(off, w), r, 3, 3);
}

BuiltCode d4_family(std::size_t r, std::size_t delta, std::size_t ell, std::size_t e) {
    const char* anchor = "d = 4 rows of the parameter table";
    if (ell < 2) throw DomainError("ell >= 2 required, got ell=" + num(ell), anchor);
    const std::string name = "d4.r" + num(r) + "delta" + num(delta) + ".l" + num(ell) + ".e" + num(e);

    if (r == 2 && delta == 3) {
        if (e != 0)
            throw DomainError("(2,3), d = 4 exists only for odd k = 2 ell - 1 (even k: length not divisible by 4)",
                              "d = 4, r = 2, delta = 3 divisibility argument");
        const GtpSpec spec = d4_23_spec(ell);
        check_gtp_preconditions(spec);
        const auto off = block_offsets(ell, 4, 0, 0);
        return finish(name, gtp_parity(spec), block_supports(off, 4), r, delta, 4);
    }
    if (r == 3 && delta == 3) {
        if (e > 1)
            throw DomainError("(3,3), d = 4 requires e in {0,1}; k = 0 mod 3 is impossible",
                              "d = 4, r = 3, delta = 3 divisibility argument");
        const Matrix bm = mds524_parity();
        const Matrix b1 = rows_of(bm, 0, 2);
        const Matrix b2 = rows_of(bm, 2, 1);
        if (e == 0) {
            const GtpSpec spec = d4_33_spec(ell);
            check_gtp_preconditions(spec);
            return finish(name, gtp_parity(spec), block_supports(block_offsets(ell, 5, 0, 0), 5), r, delta, 4);
        }
        // The last group is shifted left onto the previous one by one column.
        const auto off = block_offsets(ell, 5, ell - 2, 1);
        const std::size_t n = 5 * ell - 1;
        return finish(name, place_blocks(b1, b2, off, n), block_supports(off, 5), r, delta, 4);
    }
    if (r == 2 && delta == 4) {
        if (e > 1) throw DomainError("(2,4), d = 4 requires e in {0,1}", anchor);
        const auto off = block_offsets(ell, 5, 0, e);
        return finish(name, place_blocks(mds524_parity(), Matrix(0, 5), off, 5 * ell - e), block_supports(off, 5), r,
                      delta, 4);
    }
    if (r == 3 && delta == 4) {
        if (e > 2) throw DomainError("(3,4), d = 4 requires e in {0,1,2}", anchor);
        const auto off = block_offsets(ell, 6, 0, e);
        return finish(name, place_blocks(mds634_parity(), Matrix(0, 6), off, 6 * ell - e), block_supports(off, 6), r,
                      delta, 4);
    }
    throw DomainError("(r, delta) must be one of (2,3), (3,3), (2,4), (3,4) for d = 4", anchor);
}

BuiltCode gtp33_family(std::size_t ell) {
    if (ell < 2) throw DomainError("ell >= 2 required, got ell=" + num(ell), "(3,3), d = 5 tensor family");
    const GtpSpec spec = gtp33_spec(ell);
    check_gtp_preconditions(spec);
    return finish("large.gtp33.l" + num(ell), gtp_parity(spec), block_supports(block_offsets(ell, 5, 0, 0), 5), 3, 3,
                  5);
}

BuiltCode gtp34_family(std::size_t ell) {
    if (ell < 2) throw DomainError("ell >= 2 required, got ell=" + num(ell), "(3,4), d = 6 tensor family");
    const GtpSpec spec = gtp34_spec(ell);
    check_gtp_preconditions(spec);
    return finish("large.gtp34.l" + num(ell), gtp_parity(spec), block_supports(block_offsets(ell, 6, 0, 0), 6), 3, 4,
                  6);
}

}  // namespace lrc4
