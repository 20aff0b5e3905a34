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

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

namespace ghforge {
namespace {

GHMatrix parse(const std::string& text, MatrixLimits limits = {}) {
    std::istringstream is(text);
    return read_matrix(is, limits);
}

const char* const kGf3Header = "# version=1\n# p=3\n# n=1\n# modulus=0,1\n";

TEST(MatrixFile, RoundTripProperty) {
    std::mt19937 rng(42);
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 4}, {5, 1}};
    const Provenance provenances[] = {Provenance::Theorem31, Provenance::Theorem32, Provenance::Theorem33,
                                      Provenance::MOfF, Provenance::External};
    for (int trial = 0; trial < 60; ++trial) {
        const auto [p, n] = fields[trial % fields.size()];
        const auto f = FiniteField::create(p, n);
        const std::uint32_t lambda = 1 + trial % 3;
        const std::uint32_t k = f.order() * lambda;
        std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
        std::vector<GHMatrix::Entry> e(std::size_t{k} * k);
        for (auto& x : e) x = static_cast<GHMatrix::Entry>(pick(rng));
        const GHMatrix m(f, lambda, provenances[trial % 5], e);
        const std::string text = to_text(m);
        const GHMatrix back = parse(text);
        ASSERT_EQ(back, m);
        ASSERT_EQ(to_text(back), text);
    }
}

TEST(MatrixFile, FixturesAreCanonical) {
    for (const char* name : {"example_1_gf5_m_x2.txt", "example_2i_gf3.txt", "example_2ii_gf3.txt",
                             "example_3_1_gf3_t31.txt", "example_3_2_gf3_t32.txt", "example_3_3_gf4_t32.txt",
                             "example_3_4_gf3_t33.txt"}) {
        std::ifstream is(testing::fixture_path(name), std::ios::binary);
        std::ostringstream raw;
        raw << is.rdbuf();
        EXPECT_EQ(to_text(parse(raw.str())), raw.str()) << name;
    }
}

TEST(MatrixFile, ModulusIsPreserved) {
    const auto f = FiniteField::create(3, 2, std::vector<std::uint32_t>{2, 1, 1});
    const auto m = construct_t32(f);
    const auto back = parse(to_text(m));
    EXPECT_EQ(std::vector<std::uint32_t>(back.field().modulus().begin(), back.field().modulus().end()),
              (std::vector<std::uint32_t>{2, 1, 1}));
    EXPECT_EQ(back, m);
}

TEST(MatrixFile, ToleratesCrlfAndTrailingBlankLines) {
    const std::string text = std::string("# version=1 p=2 n=1\r\n# modulus=0,1 order=2 lambda=1\r\n0 0\r\n0 1\r\n\n\n");
    const auto m = parse(text);
    EXPECT_EQ(m.order(), 2u);
    EXPECT_EQ(m(1, 1), 1);
    EXPECT_EQ(m.provenance(), Provenance::External);
}

TEST(MatrixFile, RejectsMalformedInput) {
    const std::string h = kGf3Header;
    const std::string body3 = "0 1 2\n1 2 0\n2 0 1\n";
    const std::string ok = h + "# order=3\n# lambda=1\n" + body3;
    EXPECT_NO_THROW(parse(ok));

    // Header inconsistency: a 1x1 matrix cannot have order q * lambda.
    EXPECT_THROW(parse(h + "# order=1\n# lambda=1\n0\n"), FormatError);
    EXPECT_THROW(parse(h + "# order=3\n# lambda=0\n" + body3), FormatError);
    EXPECT_THROW(parse("# version=2\n# p=3\n# n=1\n# modulus=0,1\n# order=3\n# lambda=1\n" + body3), FormatError);
    EXPECT_THROW(parse("# version=1\n# p=4\n# n=1\n# modulus=0,1\n# order=4\n# lambda=1\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n"),
                 FormatError);
    EXPECT_THROW(parse("# version=1\n# p=3\n# n=1\n# order=3\n# lambda=1\n" + body3), FormatError);
    EXPECT_THROW(parse("# version=1\n# p=2\n# n=2\n# modulus=1,0,1\n# order=4\n# lambda=1\n"
                       "0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n"),
                 FormatError);
    EXPECT_THROW(parse(h + "# order=3\n# lambda=1\n0 1 2\n1 2 0\n"), FormatError);
    EXPECT_THROW(parse(h + "# order=3\n# lambda=1\n0 1 2\n1 2\n2 0 1\n"), FormatError);
    EXPECT_THROW(parse(h + "# order=3\n# lambda=1\n0 1 2\n1 2 3\n2 0 1\n"), FormatError);
    EXPECT_THROW(parse(h + "# order=3\n# lambda=1\n0 1 x\n1 2 0\n2 0 1\n"), FormatError);
    EXPECT_THROW(parse(h + "# order=3\n# lambda=1\n0 1 -1\n1 2 0\n2 0 1\n"), FormatError);
    EXPECT_THROW(parse(h + "# order=3\n0 1 2\n# lambda=1\n1 2 0\n2 0 1\n"), FormatError);
    EXPECT_THROW(parse(h + "# order=3\n# lambda=1\n# provenance=folklore\n" + body3), FormatError);
    EXPECT_THROW(parse(h + "# order=3 lambda\n" + body3), FormatError);
    EXPECT_THROW(parse(ok, MatrixLimits{2}), FormatError);
    EXPECT_THROW(read_matrix_file("/nonexistent/ghforge/matrix.txt"), FormatError);
}

TEST(MatrixFile, PrettyRendering) {
    std::ostringstream os;
    write_pretty(os, construct_t32(FiniteField::create(2, 2)));
    std::istringstream lines(os.str());
    std::string first;
    std::getline(lines, first);
    std::istringstream tokens(first);
    std::vector<std::string> got{std::istream_iterator<std::string>(tokens), std::istream_iterator<std::string>()};
    const std::vector<std::string> expected = {"0", "0", "0", "0", "0", "1", "a", "a+1",
                                               "0", "a", "a+1", "1", "0", "a+1", "1", "a"};
    EXPECT_EQ(got, expected);
}

} // namespace
} // namespace ghforge
