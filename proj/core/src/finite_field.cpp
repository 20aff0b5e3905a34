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

#include "ghforge/finite_field.hpp"

#include "ghforge/error.hpp"

#include <algorithm>
#include <sstream>

namespace ghforge {

namespace detail {

struct FieldTables {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // c_0..c_n, monic
    std::vector<std::uint32_t> powers;   // p^j for j < n
    std::vector<std::uint16_t> add;      // q*q, only for small odd-p extension fields
    std::vector<std::uint32_t> negation; // q
    std::vector<std::uint32_t> log;      // log[x] for x != 0
    std::vector<std::uint32_t> antilog;  // 2*(q-1) entries so log sums need no reduction
};

} // namespace detail

namespace {

// Hard ceiling: matrices store entries as 16-bit encodings.
constexpr std::uint64_t kAbsoluteMaxOrder = std::uint64_t{1} << 16;
constexpr std::uint32_t kAddTableMaxOrder = 256;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

// Remainder of a modulo the monic polynomial b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) {
            const std::uint64_t t = (std::uint64_t{lead} * b[j]) % p;
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - t) % p);
        }
        trim(a);
    }
    return a;
}

Poly digits(std::uint64_t value, std::uint32_t p, std::uint32_t count) {
    Poly out(count, 0);
    for (std::uint32_t j = 0; j < count; ++j) {
        out[j] = static_cast<std::uint32_t>(value % p);
        value /= p;
    }
    return out;
}

std::uint32_t digit_add(const detail::FieldTables& t, std::uint32_t x, std::uint32_t y) {
    std::uint32_t result = 0;
    for (std::uint32_t j = 0; j < t.n; ++j) {
        const std::uint32_t s = (x % t.p + y % t.p) % t.p;
        result += s * t.powers[j];
        x /= t.p;
        y /= t.p;
    }
    return result;
}

// Polynomial product reduced by the modulus; used only while building tables.
std::uint32_t slow_mul(const detail::FieldTables& t, std::uint32_t x, std::uint32_t y) {
    const Poly a = digits(x, t.p, t.n);
    const Poly b = digits(y, t.p, t.n);
    Poly prod(2 * t.n - 1, 0);
    for (std::uint32_t i = 0; i < t.n; ++i) {
        for (std::uint32_t j = 0; j < t.n; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % t.p);
        }
    }
    const Poly r = poly_mod(prod, t.modulus, t.p);
    std::uint32_t out = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        out += r[j] * t.powers[j];
    }
    return out;
}

void build_log_tables(detail::FieldTables& t) {
    const std::uint32_t group = t.q - 1;
    t.log.assign(t.q, 0);
    t.antilog.assign(2 * static_cast<std::size_t>(group), 0);
    for (std::uint32_t g = 1; g < t.q; ++g) {
        std::uint32_t x = 1;
        std::uint32_t k = 0;
        bool primitive = true;
        do {
            t.antilog[k] = x;
            x = slow_mul(t, x, g);
            ++k;
            if (x == 1 && k < group) {
                primitive = false;
                break;
            }
        } while (k < group);
        if (primitive) {
            break;
        }
    }
    for (std::uint32_t k = 0; k < group; ++k) {
        t.antilog[k + group] = t.antilog[k];
        t.log[t.antilog[k]] = k;
    }
}

std::string render_poly(std::span<const std::uint32_t> coeffs, char var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        const std::uint32_t c = coeffs[j];
        if (c == 0) {
            continue;
        }
        if (!first) {
            os << '+';
        }
        first = false;
        if (j == 0) {
            os << c;
            continue;
        }
        if (c != 1) {
            os << c;
        }
        os << var;
        if (j > 1) {
            os << '^' << j;
        }
    }
    if (first) {
        os << '0';
    }
    return os.str();
}

} // namespace

bool is_prime(std::uint64_t value) noexcept {
    if (value < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= value; ++d) {
        if (value % d == 0) {
            return false;
        }
    }
    return true;
}

bool is_irreducible(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
    Poly f(coeffs.begin(), coeffs.end());
    trim(f);
    if (f.size() < 2) {
        return false;
    }
    const std::size_t degree = f.size() - 1;
    // Make monic so poly_mod-style reasoning about divisors is uniform.
    const std::uint32_t lead = f.back();
    if (lead != 1) {
        std::uint32_t lead_inv = 1;
        while ((std::uint64_t{lead} * lead_inv) % p != 1) {
            ++lead_inv;
        }
        for (auto& c : f) {
            c = static_cast<std::uint32_t>((std::uint64_t{c} * lead_inv) % p);
        }
    }
    for (std::size_t m = 1; m <= degree / 2; ++m) {
        std::uint64_t count = 1;
        for (std::size_t j = 0; j < m; ++j) {
            count *= p;
        }
        for (std::uint64_t r = 0; r < count; ++r) {
            Poly divisor = digits(r, p, static_cast<std::uint32_t>(m));
            divisor.push_back(1);
            if (poly_mod(f, divisor, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

FiniteField::FiniteField(std::shared_ptr<const detail::FieldTables> tables) : tables_(std::move(tables)) {}

FiniteField FiniteField::create(std::uint32_t p, std::uint32_t n, std::optional<std::vector<std::uint32_t>> modulus,
                                FieldLimits limits) {
    if (!is_prime(p)) {
        throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
    }
    if (n < 1) {
        throw InvalidArgument("extension degree must be at least 1");
    }
    const std::uint64_t cap = std::min(limits.max_order, kAbsoluteMaxOrder);
    std::uint64_t q = 1;
    for (std::uint32_t j = 0; j < n; ++j) {
        q *= p;
        if (q > cap) {
            throw SizeLimitExceeded("field order " + std::to_string(p) + "^" + std::to_string(n) +
                                    " exceeds the size cap " + std::to_string(cap));
        }
    }

    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->n = n;
    t->q = static_cast<std::uint32_t>(q);
    t->powers.resize(n);
    for (std::uint32_t j = 0, v = 1; j < n; ++j, v *= p) {
        t->powers[j] = v;
    }

    if (modulus) {
        const auto& m = *modulus;
        if (m.size() != n + 1 || m.back() != 1) {
            throw InvalidArgument("modulus must be monic of degree " + std::to_string(n));
        }
        if (std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; })) {
            throw InvalidArgument("modulus coefficient out of range [0, p)");
        }
        if (!is_irreducible(m, p)) {
            throw InvalidArgument("modulus " + render_poly(m, 'x') + " is reducible over GF(" + std::to_string(p) + ")");
        }
        t->modulus = m;
    } else {
        for (std::uint64_t r = 0; r < q; ++r) {
            Poly candidate = digits(r, p, n);
            candidate.push_back(1);
            if (is_irreducible(candidate, p)) {
                t->modulus = std::move(candidate);
                break;
            }
        }
    }

    t->negation.resize(t->q);
    for (std::uint32_t x = 0; x < t->q; ++x) {
        std::uint32_t r = 0;
        std::uint32_t v = x;
        for (std::uint32_t j = 0; j < n; ++j) {
            r += ((p - v % p) % p) * t->powers[j];
            v /= p;
        }
        t->negation[x] = r;
    }
    if (n > 1 && p != 2 && t->q <= kAddTableMaxOrder) {
        t->add.resize(std::size_t{t->q} * t->q);
        for (std::uint32_t x = 0; x < t->q; ++x) {
            for (std::uint32_t y = 0; y < t->q; ++y) {
                t->add[std::size_t{x} * t->q + y] = static_cast<std::uint16_t>(digit_add(*t, x, y));
            }
        }
    }
    build_log_tables(*t);
    return FiniteField(std::move(t));
}

std::uint32_t FiniteField::characteristic() const noexcept { return tables_->p; }
std::uint32_t FiniteField::degree() const noexcept { return tables_->n; }
std::uint32_t FiniteField::order() const noexcept { return tables_->q; }
std::span<const std::uint32_t> FiniteField::modulus() const noexcept { return tables_->modulus; }

Encoding FiniteField::add(Encoding x, Encoding y) const noexcept {
    const auto& t = *tables_;
    if (t.n == 1) {
        const Encoding s = x + y;
        return s >= t.p ? s - t.p : s;
    }
    if (t.p == 2) {
        return x ^ y;
    }
    if (!t.add.empty()) {
        return t.add[std::size_t{x} * t.q + y];
    }
    return digit_add(t, x, y);
}

Encoding FiniteField::neg(Encoding x) const noexcept { return tables_->negation[x]; }

Encoding FiniteField::sub(Encoding x, Encoding y) const noexcept { return add(x, neg(y)); }

Encoding FiniteField::mul(Encoding x, Encoding y) const noexcept {
    const auto& t = *tables_;
    if (t.n == 1) {
        return static_cast<Encoding>((std::uint64_t{x} * y) % t.p);
    }
    if (x == 0 || y == 0) {
        return 0;
    }
    return t.antilog[t.log[x] + t.log[y]];
}

Encoding FiniteField::inv(Encoding x) const {
    if (x == 0) {
        throw InvalidArgument("zero has no multiplicative inverse");
    }
    const auto& t = *tables_;
    const std::uint32_t group = t.q - 1;
    return t.antilog[(group - t.log[x]) % group];
}

Encoding FiniteField::pow(Encoding x, std::uint64_t e) const noexcept {
    if (e == 0) {
        return 1;
    }
    if (x == 0) {
        return 0;
    }
    const auto& t = *tables_;
    const std::uint64_t group = t.q - 1;
    return t.antilog[(t.log[x] * (e % group)) % group];
}

std::vector<std::uint32_t> FiniteField::coefficients(Encoding x) const { return digits(x, tables_->p, tables_->n); }

Encoding FiniteField::encode(std::span<const std::uint32_t> coeffs) const {
    const auto& t = *tables_;
    if (coeffs.size() != t.n) {
        throw InvalidArgument("coefficient vector must have length " + std::to_string(t.n));
    }
    Encoding out = 0;
    for (std::uint32_t j = 0; j < t.n; ++j) {
        if (coeffs[j] >= t.p) {
            throw InvalidArgument("coefficient out of range [0, p)");
        }
        out += coeffs[j] * t.powers[j];
    }
    return out;
}

FieldElement FiniteField::element(Encoding value) const { return FieldElement(*this, value); }
FieldElement FiniteField::zero() const { return element(0); }
FieldElement FiniteField::one() const { return element(1); }

std::vector<FieldElement> FiniteField::elements() const {
    std::vector<FieldElement> out;
    out.reserve(order());
    for (Encoding v = 0; v < order(); ++v) {
        out.emplace_back(*this, v);
    }
    return out;
}

std::string FiniteField::pretty(Encoding x) const {
    if (is_prime_field()) {
        return std::to_string(x);
    }
    const auto c = coefficients(x);
    return render_poly(c, 'a');
}

std::string FiniteField::describe() const {
    return "GF(" + std::to_string(order()) + ") modulus " + render_poly(modulus(), 'x');
}

bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    if (a.tables_ == b.tables_) {
        return true;
    }
    return a.tables_->p == b.tables_->p && a.tables_->n == b.tables_->n && a.tables_->modulus == b.tables_->modulus;
}

FieldElement::FieldElement(FiniteField field, Encoding value) : field_(std::move(field)), value_(value) {
    if (value_ >= field_.order()) {
        throw InvalidArgument("encoding " + std::to_string(value_) + " out of range for GF(" +
                              std::to_string(field_.order()) + ")");
    }
}

void FieldElement::require_same_field(const FieldElement& other) const {
    if (!(field_ == other.field_)) {
        throw FieldMismatch("arithmetic between " + field_.describe() + " and " + other.field_.describe());
    }
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    require_same_field(other);
    return FieldElement(field_, field_.add(value_, other.value_));
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    require_same_field(other);
    return FieldElement(field_, field_.sub(value_, other.value_));
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    require_same_field(other);
    return FieldElement(field_, field_.mul(value_, other.value_));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(value_)); }

} // namespace ghforge
