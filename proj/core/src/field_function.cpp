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

#include "ghforge/field_function.hpp"

#include "ghforge/error.hpp"

#include <algorithm>
#include <thread>

namespace ghforge {

FieldFunction::FieldFunction(FiniteField field, std::vector<Encoding> table, std::optional<std::vector<Encoding>> origin)
    : field_(std::move(field)), table_(std::move(table)), origin_(std::move(origin)) {}

FieldFunction FieldFunction::from_table(FiniteField field, std::vector<Encoding> values) {
    const std::uint32_t q = field.order();
    if (values.size() != q) {
        throw InvalidArgument("function table has " + std::to_string(values.size()) + " entries, expected " +
                              std::to_string(q));
    }
    if (std::any_of(values.begin(), values.end(), [q](Encoding v) { return v >= q; })) {
        throw InvalidArgument("function table entry out of range [0, q)");
    }
    return FieldFunction(std::move(field), std::move(values), std::nullopt);
}

FieldFunction FieldFunction::from_poly(FiniteField field, std::vector<Encoding> coeffs) {
    const std::uint32_t q = field.order();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] >= q) {
            throw InvalidArgument("polynomial coefficient out of range [0, q)");
        }
        if (j >= q && coeffs[j] != 0) {
            throw InvalidArgument("polynomial degree must be below the field order " + std::to_string(q));
        }
    }
    std::vector<Encoding> table(q, 0);
    for (Encoding x = 0; x < q; ++x) {
        Encoding acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = field.add(field.mul(acc, x), *it);
        }
        table[x] = acc;
    }
    return FieldFunction(std::move(field), std::move(table), std::move(coeffs));
}

FieldFunction quadratic_family(const FiniteField& field, Encoding c) {
    if (field.characteristic() == 2) {
        throw InvalidArgument("the quadratic family c + x^2 requires odd characteristic");
    }
    if (c >= field.order()) {
        throw InvalidArgument("constant term out of range [0, q)");
    }
    return FieldFunction::from_poly(field, {c, 0, 1});
}

FieldFunction linear_family(const FiniteField& field, Encoding c) {
    if (c >= field.order()) {
        throw InvalidArgument("slope out of range [0, q)");
    }
    return FieldFunction::from_poly(field, {0, c});
}

bool is_planar(const FiniteField& field, std::span<const Encoding> table) {
    const std::uint32_t q = field.order();
    std::vector<std::uint8_t> seen(q);
    for (Encoding a = 1; a < q; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Encoding x = 0; x < q; ++x) {
            const Encoding d = field.sub(table[field.add(x, a)], table[x]);
            if (seen[d]) {
                return false;
            }
            seen[d] = 1;
        }
    }
    return true;
}

bool is_planar(const FieldFunction& f) { return is_planar(f.field(), f.table()); }

bool is_type_II(const FiniteField& field, std::span<const Encoding> table) {
    const std::uint32_t q = field.order();
    const Encoding base = table[0];
    // g(x) = f(x) - f(0); require g(x + y) = g(x) + g(y).
    for (Encoding x = 1; x < q; ++x) {
        const Encoding gx = field.sub(table[x], base);
        for (Encoding y = x; y < q; ++y) {
            const Encoding gy = field.sub(table[y], base);
            const Encoding gxy = field.sub(table[field.add(x, y)], base);
            if (gxy != field.add(gx, gy)) {
                return false;
            }
        }
    }
    return true;
}

bool is_type_II(const FieldFunction& f) { return is_type_II(f.field(), f.table()); }

FunctionClass classify(const FieldFunction& f) { return {is_planar(f), is_type_II(f)}; }

namespace {

ClassCounts classify_range(const FiniteField& field, std::uint64_t begin, std::uint64_t end) {
    const std::uint32_t q = field.order();
    std::vector<Encoding> table(q, 0);
    std::uint64_t v = begin;
    for (std::uint32_t i = 0; i < q; ++i) {
        table[i] = static_cast<Encoding>(v % q);
        v /= q;
    }
    ClassCounts counts;
    for (std::uint64_t index = begin; index < end; ++index) {
        const bool planar = is_planar(field, table);
        const bool type_II = is_type_II(field, table);
        ++counts.total;
        counts.type_I += planar;
        counts.type_II += type_II;
        counts.both += planar && type_II;
        for (std::uint32_t i = 0; i < q; ++i) {
            if (++table[i] < q) {
                break;
            }
            table[i] = 0;
        }
    }
    return counts;
}

} // namespace

ClassCounts classify_all_functions(const FiniteField& field, unsigned threads) {
    const std::uint32_t q = field.order();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < q; ++i) {
        total *= q;
        if (total > kMaxExhaustiveFunctions) {
            throw SizeLimitExceeded("GF(" + std::to_string(q) + ") has more than " +
                                    std::to_string(kMaxExhaustiveFunctions) + " functions; exhaustive classification refused");
        }
    }
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

    std::vector<ClassCounts> partial(threads);
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t begin = total * w / threads;
        const std::uint64_t end = total * (w + 1) / threads;
        workers.emplace_back([&, w, begin, end] { partial[w] = classify_range(field, begin, end); });
    }
    workers.clear();

    ClassCounts sum;
    for (const auto& c : partial) {
        sum.total += c.total;
        sum.type_I += c.type_I;
        sum.type_II += c.type_II;
        sum.both += c.both;
    }
    return sum;
}

} // namespace ghforge
