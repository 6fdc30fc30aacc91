/**************************************************************************
 * linear_code.hpp
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
#include <functional>
#include <span>
#include <vector>

#include "lrc4/matrix.hpp"

namespace lrc4 {

/// Sorted set of 0-based coordinate indices.
using Support = std::vector<std::size_t>;

/// Converts 1-based positions (as printed in tables) to a sorted 0-based Support.
Support from_one_based(std::initializer_list<std::size_t> positions);
Support from_one_based(std::span<const std::size_t> positions);
std::vector<std::size_t> to_one_based(const Support& support);

/// Linear [n, k] code over GF(4) held as a canonical pair of matrices.
///
/// The generator is kept in reduced row echelon form and the parity-check
/// matrix is the canonical null-space basis of the generator, so two codes
/// compare equal iff they have the same codeword set.
class LinearCode {
public:
    /// Dependent rows are dropped. Throws PreconditionError on an empty or all-zero matrix.
    static LinearCode from_parity(const Matrix& h);
    static LinearCode from_generator(const Matrix& g);
    /// Like from_generator, but accepts a zero-dimensional result (k = 0).
    static LinearCode from_generator_rows(const Matrix& g, std::size_t length);

    [[nodiscard]] std::size_t length() const { return n_; }
    [[nodiscard]] std::size_t dimension() const { return generator_.rows(); }
    [[nodiscard]] std::size_t codimension() const { return n_ - dimension(); }
    [[nodiscard]] const Matrix& generator() const { return generator_; }
    [[nodiscard]] const Matrix& parity() const { return parity_; }

    /// Some coordinate is zero in every codeword.
    [[nodiscard]] bool degenerate() const { return !zero_coordinates_.empty(); }
    [[nodiscard]] const Support& zero_coordinates() const { return zero_coordinates_; }

    [[nodiscard]] bool contains(std::span<const F4> word) const;
    [[nodiscard]] Vector encode(std::span<const F4> message) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.generator_ == b.generator_;
    }

private:
    LinearCode(std::size_t n, Matrix generator);

    std::size_t n_ = 0;
    Matrix generator_;
    Matrix parity_;
    Support zero_coordinates_;
};

/// Default largest dimension for exhaustive enumeration (4^14 codewords).
inline constexpr std::size_t kDefaultEnumerationCap = 14;

struct EnumerationOptions {
    std::size_t cap = kDefaultEnumerationCap;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Counts A_0..A_n of codewords per Hamming weight.
struct WeightDistribution {
    std::vector<std::uint64_t> counts;

    [[nodiscard]] std::uint64_t operator[](std::size_t w) const { return w < counts.size() ? counts[w] : 0; }
    [[nodiscard]] std::uint64_t total() const;
    /// Smallest positive weight with a nonzero count; 0 for the zero code.
    [[nodiscard]] std::size_t min_distance() const;
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Exhaustive over all 4^k codewords. Throws CapExceeded when k > options.cap.
WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options = {});
std::size_t min_distance(const LinearCode& code, const EnumerationOptions& options = {});

/// Calls fn for every codeword (including zero). Same cap as weight_distribution.
void for_each_codeword(const LinearCode& code, const std::function<void(std::span<const F4>)>& fn,
                       const EnumerationOptions& options = {});
std::vector<Vector> codewords_of_weight(const LinearCode& code, std::size_t w, const EnumerationOptions& options = {});

/// Deletes the listed coordinates.
LinearCode puncture(const LinearCode& code, const Support& positions);
/// Keeps codewords vanishing on the listed coordinates, then deletes them.
LinearCode shorten(const LinearCode& code, const Support& positions);
/// The punctured code on `support` (puncture of the complement).
LinearCode restriction(const LinearCode& code, const Support& support);
LinearCode dual(const LinearCode& code);

/// Singleton defect n - k + 1 - d.
std::size_t defect(const LinearCode& code, const EnumerationOptions& options = {});
bool is_mds(const LinearCode& code, const EnumerationOptions& options = {});

}  // namespace lrc4
