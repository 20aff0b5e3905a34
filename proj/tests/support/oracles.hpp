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

// Test-only reference implementations. Nothing here calls into the library's
// arithmetic, constructions or verifier, so they can serve as independent
// oracles for it.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ghforge::testing {

std::filesystem::path fixture_path(const std::string& name);

/// GF(p^n) by schoolbook polynomial arithmetic on coefficient vectors.
class NaiveField {
public:
    NaiveField(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t q() const { return q_; }

    std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;

private:
    std::vector<std::uint32_t> digits(std::uint32_t x) const;
    std::uint32_t value(const std::vector<std::uint32_t>& d) const;

    std::uint32_t p_;
    std::uint32_t n_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
};

using Table = std::vector<std::uint32_t>;
using Rows = std::vector<std::vector<std::uint32_t>>;

/// f(b1) - f(b1 - a) == f(b2) - f(b2 - a) for all a, b1, b2.
bool literal_type_II(const NaiveField& f, const Table& t);

/// For all a1 != a2 the row difference { f(b - a1) - f(b - a2) : b } is all of F.
bool literal_type_I(const NaiveField& f, const Table& t);

/// Direct reading of the GH definition on a row-list matrix.
bool naive_is_gh(const NaiveField& f, const Rows& m, std::uint32_t lambda);

/// Coefficients of a0 + a1 x + a2 x^2 + sum_{i=1}^{n-1} b[i-1] x^{p^i} (p odd).
std::vector<std::uint32_t> quadratic_plus_linearized(std::uint32_t p, std::uint32_t n, std::uint32_t a0,
                                                     std::uint32_t a1, std::uint32_t a2,
                                                     const std::vector<std::uint32_t>& b);

/// Coefficients of a + sum_{i=0}^{n-1} b[i] x^{p^i}.
std::vector<std::uint32_t> affine_linearized(std::uint32_t p, std::uint32_t n, std::uint32_t a,
                                             const std::vector<std::uint32_t>& b);

/// Every value table over the field, in base-q counter order.
std::vector<Table> all_tables(std::uint32_t q);

} // namespace ghforge::testing
