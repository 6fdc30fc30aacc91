/**************************************************************************
 * enumerate.cpp
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
#include <atomic>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>

#include "lrc4/error.hpp"
#include "lrc4/linear_code.hpp"

namespace lrc4 {

namespace {

constexpr std::size_t kMaxWords = 4;

// A GF(4) word split into low and high bit planes, W 64-bit words each.
template <std::size_t W>
struct Packed {
    std::array<std::uint64_t, W> lo{};
    std::array<std::uint64_t, W> hi{};

    void operator^=(const Packed& o) {
        for (std::size_t i = 0; i < W; ++i) {
            lo[i] ^= o.lo[i];
            hi[i] ^= o.hi[i];
        }
    }
    [[nodiscard]] unsigned weight() const {
        unsigned w = 0;
        for (std::size_t i = 0; i < W; ++i) w += static_cast<unsigned>(std::popcount(lo[i] | hi[i]));
        return w;
    }
};

template <std::size_t W>
Packed<W> pack(std::span<const F4> v) {
    Packed<W> p;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const auto b = v[j].bits();
        if (b & 1u) p.lo[j / 64] |= std::uint64_t{1} << (j % 64);
        if (b & 2u) p.hi[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return p;
}

// alpha * (l + h*alpha) = h + (l + h)*alpha
template <std::size_t W>
Packed<W> times_alpha(const Packed<W>& p) {
    Packed<W> r;
    for (std::size_t i = 0; i < W; ++i) {
        r.lo[i] = p.hi[i];
        r.hi[i] = p.lo[i] ^ p.hi[i];
    }
    return r;
}

// GF(4)^k viewed as GF(2)^{2k}: basis g_0, alpha g_0, g_1, alpha g_1, ...
template <std::size_t W>
std::vector<Packed<W>> binary_basis(const Matrix& g) {
    std::vector<Packed<W>> basis;
    basis.reserve(2 * g.rows());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        const auto p = pack<W>(g.row(r));
        basis.push_back(p);
        basis.push_back(times_alpha(p));
    }
    return basis;
}

// Walks the 2^free_bits codewords whose top fixed bits equal `prefix`, in Gray order.
template <std::size_t W, typename Visit>
void walk(const std::vector<Packed<W>>& basis, std::size_t free_bits, std::uint64_t prefix, Visit&& visit) {
    Packed<W> cur;
    for (std::size_t b = free_bits; b < basis.size(); ++b)
        if ((prefix >> (b - free_bits)) & 1u) cur ^= basis[b];
    visit(cur);
    const std::uint64_t steps = std::uint64_t{1} << free_bits;
    for (std::uint64_t t = 1; t < steps; ++t) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(t))];
        visit(cur);
    }
}

unsigned resolve_threads(const EnumerationOptions& options) {
    unsigned t = options.threads;
    if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
    return t;
}

template <std::size_t W>
WeightDistribution distribution_w(const LinearCode& code, const EnumerationOptions& options) {
    const auto basis = binary_basis<W>(code.generator());
    const std::size_t bits = basis.size();
    const std::size_t n = code.length();
    const unsigned threads = resolve_threads(options);

    constexpr std::size_t kParallelThreshold = 16;
    if (threads <= 1 || bits < kParallelThreshold) {
        std::vector<std::uint64_t> counts(n + 1, 0);
        walk<W>(basis, bits, 0, [&](const Packed<W>& c) { ++counts[c.weight()]; });
        return {std::move(counts)};
    }

    // Fix the top `prefix_bits` coordinates per chunk; chunks are claimed dynamically.
    std::size_t prefix_bits = 0;
    while ((std::size_t{1} << prefix_bits) < 8u * threads && prefix_bits + 8 < bits) ++prefix_bits;
    const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;
    const std::size_t free_bits = bits - prefix_bits;

    std::atomic<std::uint64_t> next{0};
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(n + 1, 0));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            auto& counts = partial[t];
            for (std::uint64_t c = next++; c < chunks; c = next++)
                walk<W>(basis, free_bits, c, [&](const Packed<W>& w) { ++counts[w.weight()]; });
        });
    }
    for (auto& th : pool) th.join();

    std::vector<std::uint64_t> counts(n + 1, 0);
    for (const auto& p : partial)
        for (std::size_t w = 0; w <= n; ++w) counts[w] += p[w];
    return {std::move(counts)};
}

void check_cap(const LinearCode& code, const EnumerationOptions& options) {
    if (code.dimension() > options.cap)
        throw CapExceeded("exhaustive enumeration limited to dimension " + std::to_string(options.cap) +
                              ", code has dimension " + std::to_string(code.dimension()),
                          options.cap);
    if (code.length() > kMaxWords * 64) throw CapExceeded("code length exceeds 256", kMaxWords * 64);
}

}  // namespace

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options) {
    check_cap(code, options);
    switch ((code.length() + 63) / 64) {
        case 0:
        case 1: return distribution_w<1>(code, options);
        case 2: return distribution_w<2>(code, options);
        case 3: return distribution_w<3>(code, options);
        default: return distribution_w<4>(code, options);
    }
}

void for_each_codeword(const LinearCode& code, const std::function<void(std::span<const F4>)>& fn,
                       const EnumerationOptions& options) {
    check_cap(code, options);
    const Matrix& g = code.generator();
    const std::size_t k = g.rows();
    const std::size_t n = code.length();
    Vector word(n);
    fn(word);
    // Gray code over GF(4)^k: each step adds (delta) * g_i for a single row i.
    const std::uint64_t total = std::uint64_t{1} << (2 * k);
    for (std::uint64_t t = 1; t < total; ++t) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(t));
        const std::size_t row = bit / 2;
        const F4 delta = (bit % 2 == 0) ? kOne : kAlpha;
        for (std::size_t c = 0; c < n; ++c) word[c] += delta * g(row, c);
        fn(word);
    }
}

}  // namespace lrc4
