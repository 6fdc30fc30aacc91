/**************************************************************************
 * galois.cpp
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
#include "lrc4/galois.hpp"

#include <algorithm>

#include "lrc4/error.hpp"

namespace lrc4 {

namespace {

struct LogTables {
    std::array<std::uint8_t, 510> exp{};
    std::array<std::uint8_t, 256> log{};

    LogTables() {
        unsigned v = 1;
        for (unsigned i = 0; i < 255; ++i) {
            exp[i] = static_cast<std::uint8_t>(v);
            exp[i + 255] = static_cast<std::uint8_t>(v);
            log[v] = static_cast<std::uint8_t>(i);
            v <<= 1;
            if (v & 0x100u) v ^= F256::kModulus;
        }
    }
};

const LogTables& tables() {
    static const LogTables t;
    return t;
}

}  // namespace

std::optional<F4> F4::parse(std::string_view token) {
    if (token == "0") return kZero;
    if (token == "1") return kOne;
    if (token == "a" || token == "\xCE\xB1") return kAlpha;  // α
    if (token == "b" || token == "\xCE\xB2") return kBeta;   // β
    return std::nullopt;
}

F4Tables f4_table() {
    F4Tables t{};
    for (F4 x : kF4Elements) {
        for (F4 y : kF4Elements) {
            t.add[x.bits()][y.bits()] = x + y;
            t.mul[x.bits()][y.bits()] = x * y;
        }
    }
    for (std::uint8_t i = 1; i < 4; ++i) t.inverse[i - 1] = F4::from_bits(i).inverse();
    return t;
}

F256 operator*(F256 x, F256 y) {
    if (x.is_zero() || y.is_zero()) return F256{};
    const auto& t = tables();
    return F256(t.exp[t.log[x.value()] + t.log[y.value()]]);
}

F256 F256::exp(long long e) {
    long long m = e % 255;
    if (m < 0) m += 255;
    return F256(tables().exp[static_cast<std::size_t>(m)]);
}

unsigned F256::log() const {
    if (is_zero()) throw PreconditionError("log of zero in GF(256)");
    return tables().log[value_];
}

F256 F256::pow(long long e) const {
    if (is_zero()) return e == 0 ? F256(1) : F256{};
    return exp(static_cast<long long>(log()) * (e % 255));
}

F256 F256::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero in GF(256)");
    return exp(255 - static_cast<long long>(log()));
}

unsigned F256::order() const {
    if (is_zero()) return 0;
    const unsigned l = log();
    unsigned a = l, b = 255;
    while (b != 0) {
        const unsigned t = a % b;
        a = b;
        b = t;
    }
    return 255 / a;  // 255 / gcd(log, 255)
}

F256 embed(F4 x) {
    switch (x.bits()) {
        case 0: return F256{};
        case 1: return F256(1);
        case 2: return F256::exp(85);
        default: return F256::exp(170);
    }
}

std::optional<F4> project(F256 x) {
    for (F4 c : kF4Elements) {
        if (embed(c) == x) return c;
    }
    return std::nullopt;
}

F256 f256_seventeenth_root() { return F256::exp(15); }

void poly_normalize(Poly4& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly4 poly_mul(const Poly4& p, const Poly4& q) {
    if (p.empty() || q.empty()) return {};
    Poly4 r(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    }
    poly_normalize(r);
    return r;
}

F256 poly_eval(const Poly4& p, F256 x) {
    F256 acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + embed(*it);
    return acc;
}

Poly4 minimal_poly_over_f4(F256 x) {
    if (x.is_zero()) throw PreconditionError("minimal polynomial of zero is not defined");

    std::vector<F256> orbit{x};
    for (F256 y = x.frobenius4(); y != x; y = y.frobenius4()) orbit.push_back(y);

    // prod (X + c) over the Frobenius orbit, coefficients in GF(256)
    std::vector<F256> coeffs{F256(1)};
    for (F256 c : orbit) {
        std::vector<F256> next(coeffs.size() + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i] * c;
            next[i + 1] += coeffs[i];
        }
        coeffs = std::move(next);
    }

    Poly4 result;
    result.reserve(coeffs.size());
    for (F256 c : coeffs) {
        auto sub = project(c);
        if (!sub) throw Error("minimal polynomial coefficient outside GF(4)");
        result.push_back(*sub);
    }
    return result;
}

}  // namespace lrc4
