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
#include <string_view>
#include <vector>

namespace ghforge {

/// Where a matrix came from. The verifier never looks at this.
enum class Provenance {
    Theorem31, ///< blocks M(a_i a_j + x^2)
    Theorem32, ///< blocks M((a_i + a_j) x)
    Theorem33, ///< outer blocks a_i a_j J + H_q
    MOfF,      ///< a single M(f)
    External,  ///< read from elsewhere
};

/// File-format tag: "theorem-3.1", "theorem-3.2", "theorem-3.3", "M-of-f", "external".
std::string_view to_string(Provenance provenance) noexcept;
std::optional<Provenance> parse_provenance(std::string_view tag) noexcept;

struct MatrixLimits {
    std::uint64_t max_order = 4096;

    /// Default limits, with max_order overridden by GHFORGE_MAX_ORDER when set.
    static MatrixLimits from_environment();
};

/**
 * Square matrix over GF(q) with a claimed lambda, order k = q * lambda.
 * Entries are dense row-major encodings.
 */
class GHMatrix {
public:
    using Entry = std::uint16_t;

    /// Throws InvalidArgument unless entries.size() == k*k with k = q*lambda
    /// and every entry lies in [0, q).
    GHMatrix(FiniteField field, std::uint32_t claimed_lambda, Provenance provenance, std::vector<Entry> entries);

    const FiniteField& field() const noexcept { return field_; }
    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t claimed_lambda() const noexcept { return claimed_lambda_; }
    Provenance provenance() const noexcept { return provenance_; }

    Entry operator()(std::uint32_t row, std::uint32_t col) const noexcept {
        return entries_[std::size_t{row} * order_ + col];
    }
    Entry at(std::uint32_t row, std::uint32_t col) const;
    std::span<const Entry> row(std::uint32_t r) const noexcept {
        return std::span<const Entry>(entries_).subspan(std::size_t{r} * order_, order_);
    }
    std::span<const Entry> data() const noexcept { return entries_; }

    /// Copy with one entry replaced.
    GHMatrix with_entry(std::uint32_t row, std::uint32_t col, Entry value) const;

    friend bool operator==(const GHMatrix& a, const GHMatrix& b) noexcept;

private:
    FiniteField field_;
    std::uint32_t order_ = 0;
    std::uint32_t claimed_lambda_ = 0;
    Provenance provenance_ = Provenance::External;
    std::vector<Entry> entries_;
};

/// Transpose, keeping field, lambda and provenance.
GHMatrix transpose(const GHMatrix& m);

} // namespace ghforge
