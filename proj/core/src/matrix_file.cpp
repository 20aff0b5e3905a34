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

#include "ghforge/matrix_file.hpp"

#include "ghforge/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

namespace ghforge {

namespace {

template <typename T>
T parse_uint(std::string_view text, std::string_view what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw FormatError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') {
            ++pos;
        }
        if (pos > start) {
            out.push_back(line.substr(start, pos - start));
        }
    }
    return out;
}

const std::string& require(const std::map<std::string, std::string, std::less<>>& header, std::string_view key) {
    const auto it = header.find(key);
    if (it == header.end()) {
        throw FormatError("missing header key '" + std::string(key) + "'");
    }
    return it->second;
}

} // namespace

void write_matrix(std::ostream& os, const GHMatrix& m) {
    const FiniteField& f = m.field();
    os << "# version=" << kMatrixFormatVersion << '\n';
    os << "# p=" << f.characteristic() << '\n';
    os << "# n=" << f.degree() << '\n';
    os << "# modulus=";
    const auto mod = f.modulus();
    for (std::size_t j = 0; j < mod.size(); ++j) {
        os << (j ? "," : "") << mod[j];
    }
    os << '\n';
    os << "# order=" << m.order() << '\n';
    os << "# lambda=" << m.claimed_lambda() << '\n';
    os << "# provenance=" << to_string(m.provenance()) << '\n';
    std::string line;
    for (std::uint32_t r = 0; r < m.order(); ++r) {
        line.clear();
        for (const auto e : m.row(r)) {
            if (!line.empty()) {
                line += ' ';
            }
            line += std::to_string(e);
        }
        line += '\n';
        os << line;
    }
}

std::string to_text(const GHMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

void write_matrix_file(const std::filesystem::path& path, const GHMatrix& m) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw Error("cannot open '" + path.string() + "' for writing");
    }
    write_matrix(os, m);
    if (!os) {
        throw Error("failed writing '" + path.string() + "'");
    }
}

GHMatrix read_matrix(std::istream& is, MatrixLimits limits) {
    std::map<std::string, std::string, std::less<>> header;
    std::vector<std::string> body;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty() && line.front() == '#') {
            if (!body.empty()) {
                throw FormatError("line " + std::to_string(line_no) + ": header line after matrix body");
            }
            for (const auto token : split_ws(std::string_view(line).substr(1))) {
                const auto eq = token.find('=');
                if (eq == std::string_view::npos || eq == 0) {
                    throw FormatError("line " + std::to_string(line_no) + ": expected key=value, got '" +
                                      std::string(token) + "'");
                }
                header.insert_or_assign(std::string(token.substr(0, eq)), std::string(token.substr(eq + 1)));
            }
            continue;
        }
        body.push_back(line);
    }
    while (!body.empty() && split_ws(body.back()).empty()) {
        body.pop_back();
    }

    const auto version = parse_uint<int>(require(header, "version"), "version");
    if (version != kMatrixFormatVersion) {
        throw FormatError("unsupported format version " + std::to_string(version));
    }
    const auto p = parse_uint<std::uint32_t>(require(header, "p"), "p");
    const auto n = parse_uint<std::uint32_t>(require(header, "n"), "n");
    const auto order = parse_uint<std::uint64_t>(require(header, "order"), "order");
    const auto lambda = parse_uint<std::uint64_t>(require(header, "lambda"), "lambda");

    std::vector<std::uint32_t> modulus;
    std::string_view mod_text = require(header, "modulus");
    while (true) {
        const auto comma = mod_text.find(',');
        modulus.push_back(parse_uint<std::uint32_t>(mod_text.substr(0, comma), "modulus coefficient"));
        if (comma == std::string_view::npos) {
            break;
        }
        mod_text.remove_prefix(comma + 1);
    }

    Provenance provenance = Provenance::External;
    if (const auto it = header.find("provenance"); it != header.end()) {
        const auto parsed = parse_provenance(it->second);
        if (!parsed) {
            throw FormatError("unknown provenance '" + it->second + "'");
        }
        provenance = *parsed;
    }

    std::optional<FiniteField> field;
    try {
        field = FiniteField::create(p, n, modulus);
    } catch (const Error& e) {
        throw FormatError(std::string("bad field header: ") + e.what());
    }
    const std::uint32_t q = field->order();
    if (lambda == 0 || lambda > order || q * lambda != order) {
        throw FormatError("header inconsistency: order " + std::to_string(order) + " != q*lambda = " +
                          std::to_string(q) + "*" + std::to_string(lambda));
    }
    if (order > limits.max_order) {
        throw FormatError("matrix order " + std::to_string(order) + " exceeds the size cap " +
                          std::to_string(limits.max_order));
    }
    if (body.size() != order) {
        throw FormatError("expected " + std::to_string(order) + " matrix rows, found " + std::to_string(body.size()));
    }

    std::vector<GHMatrix::Entry> entries;
    entries.reserve(order * order);
    for (std::size_t r = 0; r < body.size(); ++r) {
        const auto tokens = split_ws(body[r]);
        if (tokens.size() != order) {
            throw FormatError("row " + std::to_string(r) + " has " + std::to_string(tokens.size()) +
                              " entries, expected " + std::to_string(order));
        }
        for (const auto tok : tokens) {
            const auto v = parse_uint<std::uint32_t>(tok, "matrix entry");
            if (v >= q) {
                throw FormatError("row " + std::to_string(r) + ": entry " + std::to_string(v) +
                                  " out of range [0, " + std::to_string(q) + ")");
            }
            entries.push_back(static_cast<GHMatrix::Entry>(v));
        }
    }
    return GHMatrix(*field, static_cast<std::uint32_t>(lambda), provenance, std::move(entries));
}

GHMatrix read_matrix_file(const std::filesystem::path& path, MatrixLimits limits) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw FormatError("cannot open '" + path.string() + "'");
    }
    return read_matrix(is, limits);
}

void write_pretty(std::ostream& os, const GHMatrix& m) {
    const FiniteField& f = m.field();
    std::vector<std::string> labels(f.order());
    std::size_t width = 1;
    for (Encoding v = 0; v < f.order(); ++v) {
        labels[v] = f.pretty(v);
        width = std::max(width, labels[v].size());
    }
    for (std::uint32_t r = 0; r < m.order(); ++r) {
        std::string line;
        for (const auto e : m.row(r)) {
            if (!line.empty()) {
                line += ' ';
            }
            line += std::string(width - labels[e].size(), ' ') + labels[e];
        }
        os << line << '\n';
    }
}

} // namespace ghforge
