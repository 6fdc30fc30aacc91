/**************************************************************************
 * gtp.cpp
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

#include "lrc4/constructions.hpp"
#include "lrc4/error.hpp"

namespace lrc4 {

Matrix ones_row(std::size_t ell) {
    Matrix m(1, ell);
    for (std::size_t j = 0; j < ell; ++j) m.at(0, j) = kOne;
    return m;
}

Matrix gtp_parity(const GtpSpec& spec) {
    return vstack(kron(Matrix::identity(spec.ell), spec.b1), kron(spec.a2, spec.b2));
}

std::size_t gtp_dimension(const GtpSpec& spec) { return spec.ell * spec.r() - spec.mu() * spec.nu(); }

std::size_t gtp_distance_bound(const GtpSpec& spec) {
    const std::size_t base = spec.delta() * (spec.mu() + 1);
    if (spec.r() == spec.nu()) return base;
    return std::min(base, spec.delta() + spec.nu());
}

void check_gtp_preconditions(const GtpSpec& spec, bool require_stacked_mds) {
    if (spec.b1.rows() == 0 || spec.b1.cols() <= spec.b1.rows())
        throw PreconditionError("gtp: B1 must have delta-1 rows and r+delta-1 columns with r >= 1");
    if (spec.a2.cols() != spec.ell) throw PreconditionError("gtp: A2 must have ell columns");
    if (spec.b2.cols() != spec.b1.cols()) throw PreconditionError("gtp: B2 and B1 column counts differ");
    if (spec.mu() == 0 || spec.mu() >= spec.ell) throw PreconditionError("gtp: requires 1 <= mu < ell");
    if (spec.nu() == 0 || spec.nu() > spec.r()) throw PreconditionError("gtp: requires 1 <= nu <= r");

    const LinearCode outer = LinearCode::from_parity(spec.a2);
    if (outer.dimension() != spec.ell - spec.mu() || !is_mds(outer))
        throw PreconditionError("gtp: A2 is not the parity check of an [ell, ell-mu] MDS code");

    const LinearCode local = LinearCode::from_parity(spec.b1);
    if (local.dimension() != spec.r() || !is_mds(local))
        throw PreconditionError("gtp: B1 is not the parity check of an [r+delta-1, r] MDS code");

    if (require_stacked_mds && !gtp_stacked_condition(spec))
        throw PreconditionError(spec.nu() == spec.r() ? "gtp: [B1; B2] is not invertible"
                                                      : "gtp: [B1; B2] is not the parity check of an [r+delta-1, r-nu] MDS code");
}

bool gtp_stacked_condition(const GtpSpec& spec) {
    const Matrix stacked = vstack(spec.b1, spec.b2);
    if (spec.nu() == spec.r()) return rank(stacked) == stacked.cols();
    const LinearCode inner = LinearCode::from_parity(stacked);
    return inner.dimension() == spec.r() - spec.nu() && is_mds(inner);
}

LinearCode gtp(const GtpSpec& spec) {
    check_gtp_preconditions(spec);
    return LinearCode::from_parity(gtp_parity(spec));
}

}  // namespace lrc4
