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

#include "ghforge/gh_matrix.hpp"

#include "ghforge/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace ghforge {

std::string_view to_string(Provenance provenance) noexcept {
    switch (provenance) {
    case Provenance::Theorem31:
        return "theorem-3.1";
    case Provenance::Theorem32:
        return "theorem-3.2";
    case Provenance::Theorem33:
        return "theorem-3.3";
    case Provenance::MOfF:
        return "M-of-f";
    case Provenance::External:
        break;
    }
    return "external";
}

std::optional<Provenance> parse_provenance(std::string_view tag) noexcept {
    for (auto p : {Provenance::Theorem31, Provenance::Theorem32, Provenance::Theorem33, Provenance::MOfF,
                   Provenance::External}) {
        if (to_string(p) == tag) {
            return p;
        }
    }
    return std::nullopt;
}

MatrixLimits MatrixLimits::from_environment() {
    MatrixLimits limits;
    if (const char* env = std::getenv("GHFORGE_MAX_ORDER"); env != nullptr && *env != '\0') {
        std::uint64_t value = 0;
        const char* end = env + std::strlen(env);
        const auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec != std::errc{} || ptr != end || value == 0) {
            throw InvalidArgument(std::string("GHFORGE_MAX_ORDER is not a positive integer: ") + env);
        }
        limits.max_order = value;
    }
    return limits;
}

GHMatrix::GHMatrix(FiniteField field, std::uint32_t claimed_lambda, Provenance provenance, std::vector<Entry> entries)
    : field_(std::move(field)), claimed_lambda_(claimed_lambda), provenance_(provenance), entries_(std::move(entries)) {
    if (claimed_lambda_ == 0) {
        throw InvalidArgument("lambda must be positive");
    }
    const std::uint64_t k = std::uint64_t{field_.order()} * claimed_lambda_;
    if (k > UINT32_MAX || entries_.size() != k * k) {
        throw InvalidArgument("matrix needs " + std::to_string(k) + "x" + std::to_string(k) + " entries for q=" +
                              std::to_string(field_.order()) + ", lambda=" + std::to_string(claimed_lambda_));
    }
    order_ = static_cast<std::uint32_t>(k);
    const std::uint32_t q = field_.order();
    if (std::any_of(entries_.begin(), entries_.end(), [q](Entry e) { return e >= q; })) {
        throw InvalidArgument("matrix entry out of range [0, q)");
    }
}

GHMatrix::Entry GHMatrix::at(std::uint32_t row, std::uint32_t col) const {
    if (row >= order_ || col >= order_) {
        throw InvalidArgument("matrix index out of range");
    }
    return (*this)(row, col);
}

GHMatrix GHMatrix::with_entry(std::uint32_t row, std::uint32_t col, Entry value) const {
    if (row >= order_ || col >= order_) {
        throw InvalidArgument("matrix index out of range");
    }
    auto entries = entries_;
    entries[std::size_t{row} * order_ + col] = value;
    return GHMatrix(field_, claimed_lambda_, provenance_, std::move(entries));
}

bool operator==(const GHMatrix& a, const GHMatrix& b) noexcept {
    return a.field_ == b.field_ && a.claimed_lambda_ == b.claimed_lambda_ && a.provenance_ == b.provenance_ &&
           a.entries_ == b.entries_;
}

GHMatrix transpose(const GHMatrix& m) {
    const std::uint32_t k = m.order();
    std::vector<GHMatrix::Entry> out(std::size_t{k} * k);
    for (std::uint32_t r = 0; r < k; ++r) {
        for (std::uint32_t c = 0; c < k; ++c) {
            out[std::size_t{c} * k + r] = m(r, c);
        }
    }
    return GHMatrix(m.field(), m.claimed_lambda(), m.provenance(), std::move(out));
}

} // namespace ghforge
