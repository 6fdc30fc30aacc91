/**************************************************************************
 * matrix_io.hpp
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

#include <string>
#include <string_view>
#include <vector>

#include "lrc4/constructions.hpp"
#include "lrc4/lrc.hpp"
#include "lrc4/matrix.hpp"

namespace lrc4 {

// Matrix text format:
//
//   # optional comments
//   gf4 <rows> <cols>
//   <row 1: cols symbols from {0,1,a,b} separated by spaces>
//   ...
//
// A generator matrix is marked by a "# generator" comment line before the header.

std::string export_matrix(const Matrix& m, MatrixKind kind = MatrixKind::parity);

struct ImportedMatrix {
    Matrix matrix;
    MatrixKind kind = MatrixKind::parity;
};

/// Throws ParseError (1-based line/column) on malformed input.
ImportedMatrix import_matrix_text(std::string_view text);
Matrix import_matrix(std::string_view text);

/// The code a matrix file describes, honoring its kind.
LinearCode code_from_import(const ImportedMatrix& m);

/// Space-separated symbols from {0,1,a,b,?}; '?' marks an erasure.
ErasureWord parse_erasure_word(std::string_view text);
std::string format_word(const ErasureWord& w);
std::string format_vector(const Vector& v);

/// One group per line as 1-based positions; '#' starts a comment.
std::vector<Support> import_groups(std::string_view text);
std::string export_groups(const std::vector<Support>& groups);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace lrc4
