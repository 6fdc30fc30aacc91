/**************************************************************************
 * linear_code.cpp
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
#include "lrc4/linear_code.hpp"

#include <algorithm>
#include <numeric>

#include "lrc4/error.hpp"

namespace lrc4 {

Support from_one_based(std::initializer_list<std::size_t> positions) {
    return from_one_based(std::span<const std::size_t>(positions.begin(), positions.size()));
}

Support from_one_based(std::span<const std::size_t> positions) {
    Support s;
    s.reserve(positions.size());
    for (auto p : positions) {
        if (p == 0) throw PreconditionError("1-based position 0");
        s.push_back(p - 1);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<std::size_t> to_one_based(const Support& support) {
    std::vector<std::size_t> out(support.size());
    std::transform(support.begin(), support.end(), out.begin(), [](std::size_t p) { return p + 1; });
    return out;
}

LinearCode::LinearCode(std::size_t n, Matrix generator) : n_(n), generator_(std::move(generator)) {
    if (generator_.rows() == 0) {
        parity_ = Matrix::identity(n_);
    } else {
        parity_ = null_space(generator_);
    }
    for (std::size_t c = 0; c < n_; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < generator_.rows() && zero; ++r) zero = generator_(r, c).is_zero();
        if (zero) zero_coordinates_.push_back(c);
    }
}

LinearCode LinearCode::from_generator_rows(const Matrix& g, std::size_t length) {
    if (g.rows() != 0 && g.cols() != length) throw PreconditionError("generator width does not match length");
    if (g.rows() == 0) return LinearCode(length, Matrix(0, length));
    return LinearCode(length, rref(g).reduced);
}

LinearCode LinearCode::from_generator(const Matrix& g) {
    if (g.empty() || g.is_zero()) throw PreconditionError("generator matrix is empty or all-zero");
    return LinearCode(g.cols(), rref(g).reduced);
}

LinearCode LinearCode::from_parity(const Matrix& h) {
    if (h.empty() || h.is_zero()) throw PreconditionError("parity-check matrix is empty or all-zero");
    return LinearCode(h.cols(), rref(null_space(h)).reduced);
}

bool LinearCode::contains(std::span<const F4> word) const {
    if (word.size() != n_) return false;
    const Vector s = apply(parity_, word);
    return std::all_of(s.begin(), s.end(), [](F4 x) { return x.is_zero(); });
}

Vector LinearCode::encode(std::span<const F4> message) const { return left_apply(message, generator_); }

namespace {

Support normalized_positions(const LinearCode& code, const Support& positions) {
    Support p = positions;
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (!p.empty() && p.back() >= code.length()) throw PreconditionError("position out of range");
    if (p.size() == code.length()) throw PreconditionError("cannot delete every coordinate");
    return p;
}

}  // namespace

LinearCode puncture(const LinearCode& code, const Support& positions) {
    const Support p = normalized_positions(code, positions);
    const std::size_t n = code.length() - p.size();
    return LinearCode::from_generator_rows(remove_columns(code.generator(), p), n);
}

LinearCode shorten(const LinearCode& code, const Support& positions) {
    const Support p = normalized_positions(code, positions);
    const std::size_t n = code.length() - p.size();
    const Matrix& g = code.generator();
    if (g.rows() == 0) return LinearCode::from_generator_rows(Matrix(0, n), n);
    // message combinations y with y * G restricted to p equal to zero
    const Matrix combos = null_space(transpose(select_columns(g, p)));
    if (combos.rows() == 0) return LinearCode::from_generator_rows(Matrix(0, n), n);
    return LinearCode::from_generator_rows(remove_columns(multiply(combos, g), p), n);
}

LinearCode restriction(const LinearCode& code, const Support& support) {
    if (support.empty()) throw PreconditionError("restriction to an empty support");
    std::vector<bool> keep(code.length(), false);
    for (auto s : support) {
        if (s >= code.length()) throw PreconditionError("support index out of range");
        keep[s] = true;
    }
    Support drop;
    for (std::size_t i = 0; i < code.length(); ++i)
        if (!keep[i]) drop.push_back(i);
    if (drop.empty()) return code;
    return puncture(code, drop);
}

LinearCode dual(const LinearCode& code) {
    return LinearCode::from_generator_rows(code.parity(), code.length());
}

std::uint64_t WeightDistribution::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::size_t WeightDistribution::min_distance() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w] != 0) return w;
    return 0;
}

std::size_t min_distance(const LinearCode& code, const EnumerationOptions& options) {
    if (code.dimension() == 0) throw PreconditionError("the zero code has no minimum distance");
    return weight_distribution(code, options).min_distance();
}

std::vector<Vector> codewords_of_weight(const LinearCode& code, std::size_t w, const EnumerationOptions& options) {
    std::vector<Vector> out;
    for_each_codeword(
        code,
        [&](std::span<const F4> c) {
            if (weight(c) == w) out.emplace_back(c.begin(), c.end());
        },
        options);
    return out;
}

std::size_t defect(const LinearCode& code, const EnumerationOptions& options) {
    const std::size_t d = min_distance(code, options);
    return code.length() - code.dimension() + 1 - d;
}

bool is_mds(const LinearCode& code, const EnumerationOptions& options) {
    if (code.dimension() == 0) return true;
    return defect(code, options) == 0;
}

}  // namespace lrc4
