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

#include "ghforge/constructions.hpp"

#include "ghforge/error.hpp"

namespace ghforge {

namespace {

void check_order(std::uint64_t order, const MatrixLimits& limits) {
    if (order > limits.max_order) {
        throw SizeLimitExceeded("matrix order " + std::to_string(order) + " exceeds the size cap " +
                                std::to_string(limits.max_order));
    }
}

// Lays out a q x q grid of q x q blocks; block (i, j) is blocks[index(i, j)].
template <typename BlockIndex>
std::vector<GHMatrix::Entry> tile(std::uint32_t q, const std::vector<GHMatrix>& blocks, BlockIndex index) {
    const std::size_t k = std::size_t{q} * q;
    std::vector<GHMatrix::Entry> out(k * k);
    for (std::uint32_t bi = 0; bi < q; ++bi) {
        for (std::uint32_t bj = 0; bj < q; ++bj) {
            const GHMatrix& block = blocks[index(bi, bj)];
            for (std::uint32_t r = 0; r < q; ++r) {
                const auto src = block.row(r);
                std::copy(src.begin(), src.end(), out.begin() + (std::size_t{bi} * q + r) * k + std::size_t{bj} * q);
            }
        }
    }
    return out;
}

} // namespace

GHMatrix matrix_M(const FieldFunction& f) {
    const FiniteField& field = f.field();
    const std::uint32_t q = field.order();
    const auto table = f.table();
    std::vector<GHMatrix::Entry> entries(std::size_t{q} * q);
    for (Encoding a = 0; a < q; ++a) {
        for (Encoding b = 0; b < q; ++b) {
            entries[std::size_t{a} * q + b] = static_cast<GHMatrix::Entry>(table[field.sub(b, a)]);
        }
    }
    return GHMatrix(field, 1, Provenance::MOfF, std::move(entries));
}

GHMatrix construct_t31(const FiniteField& field, MatrixLimits limits) {
    if (field.characteristic() == 2) {
        throw InvalidArgument("theorem 3.1 requires odd characteristic");
    }
    const std::uint32_t q = field.order();
    check_order(std::uint64_t{q} * q, limits);

    std::vector<GHMatrix> blocks;
    blocks.reserve(q);
    for (Encoding c = 0; c < q; ++c) {
        blocks.push_back(matrix_M(quadratic_family(field, c)));
    }
    auto entries = tile(q, blocks, [&](Encoding i, Encoding j) { return field.mul(i, j); });
    return GHMatrix(field, q, Provenance::Theorem31, std::move(entries));
}

GHMatrix construct_t32(const FiniteField& field, MatrixLimits limits) {
    const std::uint32_t q = field.order();
    check_order(std::uint64_t{q} * q, limits);

    std::vector<GHMatrix> blocks;
    blocks.reserve(q);
    for (Encoding c = 0; c < q; ++c) {
        blocks.push_back(matrix_M(linear_family(field, c)));
    }
    auto entries = tile(q, blocks, [&](Encoding i, Encoding j) { return field.add(i, j); });
    return GHMatrix(field, q, Provenance::Theorem32, std::move(entries));
}

GHMatrix construct_t33(const FiniteField& field, MatrixLimits limits) {
    const std::uint32_t q = field.order();
    check_order(std::uint64_t{q} * q * q, limits);

    const GHMatrix inner = construct_t32(field, limits);
    const std::uint32_t m = inner.order();
    const std::size_t k = std::size_t{m} * q;
    std::vector<GHMatrix::Entry> entries(k * k);
    for (Encoding bi = 0; bi < q; ++bi) {
        for (Encoding bj = 0; bj < q; ++bj) {
            const Encoding shift = field.mul(bi, bj);
            for (std::uint32_t r = 0; r < m; ++r) {
                const auto src = inner.row(r);
                auto dst = entries.begin() + (std::size_t{bi} * m + r) * k + std::size_t{bj} * m;
                for (const auto e : src) {
                    *dst++ = static_cast<GHMatrix::Entry>(field.add(shift, e));
                }
            }
        }
    }
    return GHMatrix(field, q * q, Provenance::Theorem33, std::move(entries));
}

} // namespace ghforge
