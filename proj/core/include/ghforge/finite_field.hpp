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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ghforge {

/// Integer encoding of a field element: the base-p value sum(c_j * p^j) of its
/// polynomial-basis coefficient vector. Always in [0, q).
using Encoding = std::uint32_t;

struct FieldLimits {
    /// Largest admissible field order q = p^n.
    std::uint64_t max_order = std::uint64_t{1} << 16;
};

namespace detail {
struct FieldTables;
}

class FieldElement;

/**
 * GF(p^n) with a fixed irreducible modulus.
 *
 * Elements are addressed by their integer encoding, so element i of the
 * canonical ordering a_0 = 0, a_1, ..., a_{q-1} has encoding i. The object is
 * an immutable handle onto shared lookup tables; copies are cheap and safe to
 * use from any number of threads.
 *
 * The raw-encoding operations (add, sub, mul, ...) do not range-check their
 * arguments. Use FieldElement for checked arithmetic.
 */
class FiniteField {
public:
    /// Builds GF(p^n). When `modulus` (coefficients c_0..c_n, monic) is
    /// omitted, the smallest monic irreducible of degree n is chosen, comparing
    /// (c_{n-1}, ..., c_0) as a base-p integer.
    static FiniteField create(std::uint32_t p, std::uint32_t n,
                              std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                              FieldLimits limits = {});

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint32_t order() const noexcept;
    bool is_prime_field() const noexcept { return degree() == 1; }

    /// Modulus coefficients c_0..c_n (c_n == 1).
    std::span<const std::uint32_t> modulus() const noexcept;

    Encoding add(Encoding x, Encoding y) const noexcept;
    Encoding sub(Encoding x, Encoding y) const noexcept;
    Encoding neg(Encoding x) const noexcept;
    Encoding mul(Encoding x, Encoding y) const noexcept;
    /// Multiplicative inverse; x must be nonzero.
    Encoding inv(Encoding x) const;
    Encoding pow(Encoding x, std::uint64_t e) const noexcept;
    /// x^p.
    Encoding frobenius(Encoding x) const noexcept { return pow(x, characteristic()); }

    /// Coefficient vector (c_0, ..., c_{n-1}) of x in the polynomial basis.
    std::vector<std::uint32_t> coefficients(Encoding x) const;
    /// Inverse of coefficients(); entries must lie in [0, p) and size must be n.
    Encoding encode(std::span<const std::uint32_t> coeffs) const;

    FieldElement element(Encoding value) const;
    FieldElement zero() const;
    FieldElement one() const;
    /// The q elements in canonical order; index 0 is zero.
    std::vector<FieldElement> elements() const;

    /// Renders x as a polynomial in `a` ("0", "1", "a", "a+1", "2a^2+1", ...).
    /// Prime-field elements render as plain integers.
    std::string pretty(Encoding x) const;
    /// "GF(4) modulus x^2+x+1".
    std::string describe() const;

    /// Fields compare equal when p, n and modulus agree.
    friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept;

private:
    explicit FiniteField(std::shared_ptr<const detail::FieldTables> tables);
    std::shared_ptr<const detail::FieldTables> tables_;
};

/// An element of a specific FiniteField. Arithmetic between elements of
/// different fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(FiniteField field, Encoding value);

    Encoding value() const noexcept { return value_; }
    const FiniteField& field() const noexcept { return field_; }

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    void require_same_field(const FieldElement& other) const;

    FiniteField field_;
    Encoding value_;
};

bool is_prime(std::uint64_t value) noexcept;

/// True if the polynomial with coefficients c_0..c_d over GF(p) is
/// irreducible (degree >= 1). Trial division by every monic polynomial of
/// degree <= d/2.
bool is_irreducible(std::span<const std::uint32_t> coeffs, std::uint32_t p);

} // namespace ghforge
