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

#include "support/oracles.hpp"

#include <ghforge/constructions.hpp>
#include <ghforge/error.hpp>
#include <ghforge/matrix_file.hpp>
#include <ghforge/verifier.hpp>

#include <gtest/gtest.h>

#include <random>

namespace ghforge {
namespace {

using testing::NaiveField;

testing::Rows rows_of(const GHMatrix& m) {
    testing::Rows out(m.order());
    for (std::uint32_t r = 0; r < m.order(); ++r) {
        out[r].assign(m.row(r).begin(), m.row(r).end());
    }
    return out;
}

NaiveField naive_of(const FiniteField& f) {
    return NaiveField(f.characteristic(), {f.modulus().begin(), f.modulus().end()});
}

GHMatrix random_mutation(const GHMatrix& m, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> idx(0, m.order() - 1);
    std::uniform_int_distribution<std::uint32_t> delta(1, m.field().order() - 1);
    const std::uint32_t r = idx(rng), c = idx(rng);
    const auto v = static_cast<GHMatrix::Entry>(m.field().add(m(r, c), delta(rng)));
    return m.with_entry(r, c, v);
}

TEST(Verifier, CirculantOverGf5IsGh51) {
    const auto m = read_matrix_file(testing::fixture_path("example_1_gf5_m_x2.txt"));
    const auto report = verify_gh(m, 1);
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.u, 5u);
    EXPECT_EQ(report.lambda, 1u);
    EXPECT_EQ(report.order, 5u);
    EXPECT_EQ(report.checked_pairs, 10u);
    EXPECT_FALSE(report.first_failure.has_value());
}

TEST(Verifier, SingleMOfFFixtures) {
    // M(x - x^2) is a GH(3, 1); M(2 + x) has constant row differences.
    const auto planar = read_matrix_file(testing::fixture_path("example_2i_gf3.txt"));
    EXPECT_TRUE(verify_gh(planar, 1).passed);
    const auto affine = read_matrix_file(testing::fixture_path("example_2ii_gf3.txt"));
    const auto report = verify_gh(affine, 1);
    EXPECT_FALSE(report.passed);
    ASSERT_TRUE(report.first_failure.has_value());
    // Row 0 minus row 1 is the constant 2 - 1 = 1.
    EXPECT_EQ(report.first_failure->histogram, (std::vector<std::uint32_t>{0, 3, 0}));
}

TEST(Verifier, T32OverGf3Passes) {
    const auto m = construct_t32(FiniteField::create(3, 1));
    const auto report = verify_gh(m, 3);
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.checked_pairs, 36u);
}

TEST(Verifier, SingleFlipIsCaught) {
    const auto m = construct_t32(FiniteField::create(3, 1)).with_entry(0, 0, 1);
    const auto report = verify_gh(m, 3);
    EXPECT_FALSE(report.passed);
    ASSERT_TRUE(report.first_failure.has_value());
    EXPECT_EQ(report.first_failure->row_i, 0u);
    EXPECT_EQ(report.first_failure->row_l, 1u);
    EXPECT_EQ(report.checked_pairs, 1u);
    const auto& h = report.first_failure->histogram;
    EXPECT_EQ(h.size(), 3u);
    EXPECT_NE(h, (std::vector<std::uint32_t>{3, 3, 3}));
}

TEST(Verifier, RowPairHistogram) {
    const auto m = read_matrix_file(testing::fixture_path("example_3_2_gf3_t32.txt"));
    EXPECT_EQ(row_pair_histogram(m, 0, 3), (std::vector<std::uint32_t>{3, 3, 3}));

    const GHMatrix zero(FiniteField::create(2, 1), 1, Provenance::External, {0, 0, 0, 0});
    EXPECT_EQ(row_pair_histogram(zero, 0, 1), (std::vector<std::uint32_t>{2, 0}));

    EXPECT_THROW(row_pair_histogram(m, 2, 2), InvalidArgument);
    EXPECT_THROW(row_pair_histogram(m, 0, 9), InvalidArgument);
}

TEST(Verifier, HistogramAntisymmetry) {
    std::mt19937 rng(5);
    for (auto [p, n] : {std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{5u, 1u}}) {
        const auto f = FiniteField::create(p, n);
        const std::uint32_t k = f.order() * 2;
        std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
        std::vector<GHMatrix::Entry> e(std::size_t{k} * k);
        for (auto& x : e) x = static_cast<GHMatrix::Entry>(pick(rng));
        const GHMatrix m(f, 2, Provenance::External, e);
        for (std::uint32_t i = 0; i < k; ++i) {
            for (std::uint32_t l = i + 1; l < k; ++l) {
                const auto il = row_pair_histogram(m, i, l);
                const auto li = row_pair_histogram(m, l, i);
                std::uint32_t total = 0;
                for (Encoding v = 0; v < f.order(); ++v) {
                    ASSERT_EQ(il[v], li[f.neg(v)]);
                    total += il[v];
                }
                ASSERT_EQ(total, k);
            }
        }
    }
}

TEST(Verifier, OrderLambdaMismatch) {
    const auto m = construct_t32(FiniteField::create(3, 1));
    EXPECT_THROW(verify_gh(m, 2), InvalidArgument);
    EXPECT_THROW(verify_gh(m, 0), InvalidArgument);
}

TEST(Verifier, AgreesWithNaiveDefinition) {
    std::mt19937 rng(17);
    for (auto [p, n] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}, std::pair{3u, 2u}}) {
        const auto f = FiniteField::create(p, n);
        const auto naive = naive_of(f);
        const auto t32 = construct_t32(f);
        EXPECT_TRUE(testing::naive_is_gh(naive, rows_of(t32), f.order()));
        EXPECT_TRUE(verify_gh(t32, f.order()).passed);
        for (int trial = 0; trial < 20; ++trial) {
            const auto mutated = random_mutation(t32, rng);
            ASSERT_EQ(verify_gh(mutated, f.order()).passed, testing::naive_is_gh(naive, rows_of(mutated), f.order()));
        }
    }
}

TEST(Verifier, PlanarIffTypeIExhaustive) {
    for (auto [p, n] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}}) {
        const auto f = FiniteField::create(p, n);
        for (const auto& t : testing::all_tables(f.order())) {
            const auto fn = FieldFunction::from_table(f, t);
            ASSERT_EQ(verify_gh(matrix_M(fn), 1, {.threads = 1}).passed, is_planar(fn));
        }
    }
}

TEST(Verifier, MutationsAlwaysFail) {
    std::mt19937 rng(31337);
    for (auto [p, n] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}}) {
        const auto f = FiniteField::create(p, n);
        std::vector<GHMatrix> built = {construct_t32(f), construct_t33(f)};
        if (p != 2) {
            built.push_back(construct_t31(f));
        }
        for (const auto& m : built) {
            for (int trial = 0; trial < 50; ++trial) {
                ASSERT_FALSE(verify_gh(random_mutation(m, rng), m.claimed_lambda()).passed);
            }
        }
    }
}

TEST(Verifier, ResultIndependentOfThreadCount) {
    std::mt19937 rng(8);
    const auto base = construct_t33(FiniteField::create(3, 1));
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_mutation(base, rng);
        const auto ref = verify_gh(m, 9, {.threads = 1});
        const auto all_ref = verify_gh(m, 9, {.threads = 1, .collect_all_failures = true});
        for (unsigned t : {2u, 3u, 5u, 16u}) {
            const auto r = verify_gh(m, 9, {.threads = t});
            EXPECT_EQ(r.passed, ref.passed);
            EXPECT_EQ(r.checked_pairs, ref.checked_pairs);
            EXPECT_EQ(r.first_failure, ref.first_failure);
            const auto all = verify_gh(m, 9, {.threads = t, .collect_all_failures = true});
            EXPECT_EQ(all.failures, all_ref.failures);
        }
    }
}

TEST(Verifier, CollectAllFailures) {
    const auto m = construct_t32(FiniteField::create(3, 1)).with_entry(4, 4, 2);
    const auto r = verify_gh(m, 3, {.collect_all_failures = true});
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.checked_pairs, 36u);
    // Row 4 is paired with each of the 8 other rows.
    ASSERT_EQ(r.failures.size(), 8u);
    EXPECT_EQ(r.failures.front(), *r.first_failure);
    for (const auto& f : r.failures) {
        EXPECT_TRUE(f.row_i == 4 || f.row_l == 4);
    }
    const auto early = verify_gh(m, 3);
    EXPECT_EQ(early.first_failure, r.first_failure);
    // First failure is (0,4): pairs (0,1), (0,2), (0,3), (0,4).
    EXPECT_EQ(early.first_failure->row_i, 0u);
    EXPECT_EQ(early.first_failure->row_l, 4u);
    EXPECT_EQ(early.checked_pairs, 4u);
    EXPECT_TRUE(early.failures.empty());
}

TEST(Verifier, IgnoresProvenance) {
    const auto m = construct_t32(FiniteField::create(2, 2));
    const GHMatrix relabelled(m.field(), m.claimed_lambda(), Provenance::External,
                              std::vector<GHMatrix::Entry>(m.data().begin(), m.data().end()));
    EXPECT_TRUE(verify_gh(relabelled, 4).passed);
}

} // namespace
} // namespace ghforge
