/**************************************************************************
 * galois.hpp
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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace lrc4 {

/// Element of GF(4) = GF(2)[x]/(x^2+x+1), stored as two bits.
///
/// Bit 0 is the coefficient of 1 and bit 1 the coefficient of a, so
/// 0 -> 0, 1 -> 1, 2 -> a, 3 -> b = a^2 = a+1. Addition is XOR.
class F4 {
public:
    constexpr F4() = default;

    static constexpr F4 from_bits(std::uint8_t bits) { return F4(static_cast<std::uint8_t>(bits & 3u)); }

    [[nodiscard]] constexpr std::uint8_t bits() const { return value_; }
    [[nodiscard]] constexpr bool is_zero() const { return value_ == 0; }

    friend constexpr F4 operator+(F4 x, F4 y) { return F4(static_cast<std::uint8_t>(x.value_ ^ y.value_)); }
    friend constexpr F4 operator-(F4 x, F4 y) { return x + y; }
    friend constexpr F4 operator*(F4 x, F4 y) { return F4(kMul[x.value_][y.value_]); }
    constexpr F4& operator+=(F4 y) { return *this = *this + y; }
    constexpr F4& operator*=(F4 y) { return *this = *this * y; }
    friend constexpr bool operator==(F4, F4) = default;

    /// Multiplicative inverse; the inverse of zero is reported as zero.
    [[nodiscard]] constexpr F4 inverse() const { return F4(kInv[value_]); }
    friend constexpr F4 operator/(F4 x, F4 y) { return x * y.inverse(); }

    /// One of '0', '1', 'a', 'b'.
    [[nodiscard]] constexpr char symbol() const { return "01ab"[value_]; }

    /// Accepts 0, 1, a, b and the UTF-8 aliases α, β.
    static std::optional<F4> parse(std::string_view token);

private:
    constexpr explicit F4(std::uint8_t v) : value_(v) {}

    static constexpr std::uint8_t kMul[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    static constexpr std::uint8_t kInv[4] = {0, 1, 3, 2};

    std::uint8_t value_ = 0;
};

inline constexpr F4 kZero = F4::from_bits(0);
inline constexpr F4 kOne = F4::from_bits(1);
inline constexpr F4 kAlpha = F4::from_bits(2);
inline constexpr F4 kBeta = F4::from_bits(3);
inline constexpr std::array<F4, 4> kF4Elements = {kZero, kOne, kAlpha, kBeta};

struct F4Tables {
    std::array<std::array<F4, 4>, 4> add;
    std::array<std::array<F4, 4>, 4> mul;
    /// inverse[i] is the inverse of the element with bits i+1.
    std::array<F4, 3> inverse;
};

/// Full addition / multiplication / inverse tables of GF(4).
F4Tables f4_table();

/// Element of GF(256) in polynomial basis modulo kF256Modulus.
class F256 {
public:
    /// x^8 + x^4 + x^3 + x^2 + 1; x (= 0x02) is primitive.
    static constexpr unsigned kModulus = 0x11D;

    constexpr F256() = default;
    constexpr explicit F256(std::uint8_t v) : value_(v) {}

    [[nodiscard]] constexpr std::uint8_t value() const { return value_; }
    [[nodiscard]] constexpr bool is_zero() const { return value_ == 0; }

    friend constexpr F256 operator+(F256 x, F256 y) { return F256(static_cast<std::uint8_t>(x.value_ ^ y.value_)); }
    friend F256 operator*(F256 x, F256 y);
    F256& operator+=(F256 y) { return *this = *this + y; }
    F256& operator*=(F256 y) { return *this = *this * y; }
    friend constexpr bool operator==(F256, F256) = default;

    [[nodiscard]] F256 pow(long long e) const;
    [[nodiscard]] F256 inverse() const;
    /// Multiplicative order; zero has order 0.
    [[nodiscard]] unsigned order() const;
    /// x -> x^4, the generator of Gal(GF(256)/GF(4)).
    [[nodiscard]] F256 frobenius4() const { return pow(4); }

    /// The fixed primitive element g = x.
    static F256 generator() { return F256(2); }
    /// g^e.
    static F256 exp(long long e);
    /// Discrete log base g; the argument must be nonzero.
    [[nodiscard]] unsigned log() const;

private:
    std::uint8_t value_ = 0;
};

/// Subfield embedding GF(4) -> GF(256): a maps to g^85, an element of order 3.
F256 embed(F4 x);
/// Inverse of embed() on the subfield; nullopt if x is not fixed by x -> x^4.
std::optional<F4> project(F256 x);

/// gamma = g^15, an element of multiplicative order 17.
F256 f256_seventeenth_root();

/// Polynomial over GF(4), coefficient of X^i at index i. Normalized: no trailing zeros.
using Poly4 = std::vector<F4>;

Poly4 poly_mul(const Poly4& p, const Poly4& q);
void poly_normalize(Poly4& p);
/// Evaluates p (coefficients embedded into GF(256)) at x.
F256 poly_eval(const Poly4& p, F256 x);

/// Monic minimal polynomial of x over the embedded GF(4); x must be nonzero.
Poly4 minimal_poly_over_f4(F256 x);

}  // namespace lrc4
