/**************************************************************************
 * Copyright 2026 The ghforge Authors
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

#include "ghforge/gh_matrix.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace ghforge {

// Plain-text matrix format, UTF-8 with LF line endings:
//
//   # version=1
//   # p=3
//   # n=1
//   # modulus=0,1          (c_0..c_n of the monic modulus)
//   # order=9
//   # lambda=3
//   # provenance=theorem-3.2
//   0 0 0 0 1 2 0 2 1
//   ...                    (order lines of order space-separated encodings)
//
// Header lines start with '#' and carry whitespace-separated key=value
// tokens; unknown keys are ignored.

inline constexpr int kMatrixFormatVersion = 1;

void write_matrix(std::ostream& os, const GHMatrix& m);
std::string to_text(const GHMatrix& m);
void write_matrix_file(const std::filesystem::path& path, const GHMatrix& m);

/// Throws FormatError on any syntax or consistency problem, including
/// order != q * lambda and orders above limits.max_order.
GHMatrix read_matrix(std::istream& is, MatrixLimits limits = {});
GHMatrix read_matrix_file(const std::filesystem::path& path, MatrixLimits limits = {});

/// Human-oriented rendering: extension-field entries as polynomials in `a`
/// (GF(4) prints 0, 1, a, a+1), columns padded to equal width.
void write_pretty(std::ostream& os, const GHMatrix& m);

} // namespace ghforge
