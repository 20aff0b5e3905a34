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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ghforge::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsageOrFormat = 2,
};

struct ConstructArgs {
    std::string theorem; // "3.1", "3.2" or "3.3"
    std::uint32_t p = 0;
    std::uint32_t n = 1;
    std::optional<std::vector<std::uint32_t>> modulus;
    std::optional<std::filesystem::path> out;
    bool pretty = false;
};

struct VerifyArgs {
    std::filesystem::path in;
    std::optional<std::uint32_t> lambda;
    unsigned threads = 0;
    bool all_failures = false;
    bool columns = false;
};

struct ClassifyArgs {
    std::uint32_t p = 0;
    std::uint32_t n = 1;
    std::optional<std::vector<std::uint32_t>> modulus;
    unsigned threads = 0;
};

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ghforge::cli
