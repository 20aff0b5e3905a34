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

#include "ghforge/finite_field.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ghforge {

/**
 * A total map f: GF(q) -> GF(q), stored as its value table.
 *
 * table()[i] = f(a_i) as an encoding. When built from a polynomial the
 * coefficient list is kept as `origin()`.
 */
class FieldFunction {
public:
    /// Wraps an explicit value table. Throws InvalidArgument on wrong length or
    /// out-of-range entries.
    static FieldFunction from_table(FiniteField field, std::vector<Encoding> values);

    /// Evaluates c_0 + c_1 x + ... + c_d x^d at every element (Horner).
    /// Nonzero coefficients at degree >= q are rejected: such inputs alias a
    /// lower-degree polynomial on F.
    static FieldFunction from_poly(FiniteField field, std::vector<Encoding> coeffs);

    const FiniteField& field() const noexcept { return field_; }
    std::span<const Encoding> table() const noexcept { return table_; }
    const std::optional<std::vector<Encoding>>& origin() const noexcept { return origin_; }

    Encoding operator()(Encoding x) const { return table_.at(x); }

private:
    FieldFunction(FiniteField field, std::vector<Encoding> table, std::optional<std::vector<Encoding>> origin);

    FiniteField field_;
    std::vector<Encoding> table_;
    std::optional<std::vector<Encoding>> origin_;
};

/// f_c(x) = c + x^2. Odd characteristic only.
FieldFunction quadratic_family(const FiniteField& field, Encoding c);

/// f_c(x) = c * x.
FieldFunction linear_family(const FiniteField& field, Encoding c);

/// True iff x -> f(x + a) - f(x) is a bijection for every nonzero a.
/// Equivalent to M(f) being a GH(q, 1).
bool is_planar(const FieldFunction& f);
bool is_planar(const FiniteField& field, std::span<const Encoding> table);

/// True iff f(b) - f(b - a) is independent of b for every a. Decided in
/// O(q^2) by checking that g = f - f(0) is additive.
bool is_type_II(const FieldFunction& f);
bool is_type_II(const FiniteField& field, std::span<const Encoding> table);

struct FunctionClass {
    bool is_type_I = false;
    bool is_type_II = false;
};

FunctionClass classify(const FieldFunction& f);

struct ClassCounts {
    std::uint64_t total = 0;
    std::uint64_t type_I = 0;
    std::uint64_t type_II = 0;
    /// Functions that were both; always zero for q >= 2.
    std::uint64_t both = 0;
};

/// Largest q^q accepted by classify_all_functions.
inline constexpr std::uint64_t kMaxExhaustiveFunctions = 10'000'000;

/// Enumerates all q^q value tables in base-q counter order (table[0] is the
/// least significant digit) and counts planar and type II maps. `threads == 0`
/// uses every hardware thread; the result does not depend on the thread count.
ClassCounts classify_all_functions(const FiniteField& field, unsigned threads = 0);

} // namespace ghforge
