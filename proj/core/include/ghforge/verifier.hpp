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

#include <cstdint>
#include <optional>
#include <vector>

namespace ghforge {

/// A row pair whose difference histogram is not flat.
struct PairFailure {
    std::uint32_t row_i = 0;
    std::uint32_t row_l = 0;
    /// histogram[e] = #{ j : H[i][j] - H[l][j] = e }.
    std::vector<std::uint32_t> histogram;

    friend bool operator==(const PairFailure&, const PairFailure&) = default;
};

struct VerificationReport {
    bool passed = false;
    std::uint32_t u = 0;
    std::uint32_t lambda = 0;
    std::uint32_t order = 0;
    /// All k(k-1)/2 pairs on success. On an early-exit failure, the number of
    /// pairs up to and including the first failure in lexicographic order, so
    /// the value is independent of the thread count.
    std::uint64_t checked_pairs = 0;
    /// Lexicographically smallest violating pair (i < l).
    std::optional<PairFailure> first_failure;
    /// Every violating pair in lexicographic order; filled only when
    /// VerifyOptions::collect_all_failures is set.
    std::vector<PairFailure> failures;
};

struct VerifyOptions {
    /// Worker count; 0 means one per hardware thread.
    unsigned threads = 0;
    bool collect_all_failures = false;
};

/// Difference histogram of rows i and l over the additive group of GF(q).
/// Throws InvalidArgument when i == l or an index is out of range.
std::vector<std::uint32_t> row_pair_histogram(const GHMatrix& h, std::uint32_t i, std::uint32_t l);

/**
 * Brute-force check that every pair of distinct rows differs by each group
 * element exactly lambda times.
 *
 * Reads only the entries and the additive group structure (p, n) of the
 * matrix's field; the subtraction is computed digit-wise here rather than
 * through FiniteField, and provenance is ignored. Throws InvalidArgument when
 * order != q * lambda.
 */
VerificationReport verify_gh(const GHMatrix& h, std::uint32_t lambda, VerifyOptions options = {});

} // namespace ghforge
