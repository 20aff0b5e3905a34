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

#include "ghforge/commands.hpp"

#include <CLI11.hpp>

#include <ghforge/ghforge.hpp>

#include <ostream>
#include <sstream>

namespace ghforge::cli {

namespace {

std::string format_histogram(const std::vector<std::uint32_t>& h) {
    std::ostringstream os;
    os << '[';
    for (std::size_t e = 0; e < h.size(); ++e) {
        os << (e ? "," : "") << h[e];
    }
    os << ']';
    return os.str();
}

std::string format_failure(const PairFailure& f) {
    return "rows=(" + std::to_string(f.row_i) + "," + std::to_string(f.row_l) +
           ") histogram=" + format_histogram(f.histogram);
}

void print_report(std::ostream& out, const char* prefix, const VerificationReport& r) {
    out << prefix << (r.passed ? "PASS" : "FAIL") << " u=" << r.u << " lambda=" << r.lambda << " k=" << r.order
        << " pairs=" << r.checked_pairs;
    if (r.first_failure) {
        out << ' ' << format_failure(*r.first_failure);
    }
    out << '\n';
}

} // namespace

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const MatrixLimits limits = MatrixLimits::from_environment();
        const FiniteField field = FiniteField::create(args.p, args.n, args.modulus);
        std::optional<GHMatrix> m;
        if (args.theorem == "3.1") {
            m = construct_t31(field, limits);
        } else if (args.theorem == "3.2") {
            m = construct_t32(field, limits);
        } else if (args.theorem == "3.3") {
            m = construct_t33(field, limits);
        } else {
            err << "error: unknown theorem '" << args.theorem << "' (expected 3.1, 3.2 or 3.3)\n";
            return kUsageOrFormat;
        }

        std::ostream& summary = args.out ? out : err;
        if (args.out) {
            write_matrix_file(*args.out, *m);
        } else if (!args.pretty) {
            write_matrix(out, *m);
        }
        if (args.pretty) {
            write_pretty(out, *m);
        }
        summary << "constructed " << to_string(m->provenance()) << " over " << field.describe()
                << ": order=" << m->order() << " lambda=" << m->claimed_lambda();
        if (args.out) {
            summary << " -> " << args.out->string();
        }
        summary << '\n';
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageOrFormat;
    }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const GHMatrix m = read_matrix_file(args.in, MatrixLimits::from_environment());
        const std::uint32_t lambda = args.lambda.value_or(m.claimed_lambda());
        if (std::uint64_t{m.field().order()} * lambda != m.order()) {
            err << "error: order " << m.order() << " is not q*lambda = " << m.field().order() << "*" << lambda
                << '\n';
            return kUsageOrFormat;
        }
        VerifyOptions options;
        options.threads = args.threads;
        options.collect_all_failures = args.all_failures;
        const auto report = verify_gh(m, lambda, options);
        print_report(out, "", report);
        if (args.all_failures) {
            for (const auto& f : report.failures) {
                out << "  " << format_failure(f) << '\n';
            }
        }
        if (args.columns) {
            options.collect_all_failures = false;
            print_report(out, "columns: ", verify_gh(transpose(m), lambda, options));
        }
        return report.passed ? kOk : kVerifyFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageOrFormat;
    }
}

int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const FiniteField field = FiniteField::create(args.p, args.n, args.modulus);
        const auto counts = classify_all_functions(field, args.threads);
        out << "type I: " << counts.type_I << ", type II: " << counts.type_II << '\n';
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageOrFormat;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct and verify generalized Hadamard matrices over GF(q)", "ghforge"};
    app.require_subcommand(1);

    ConstructArgs construct;
    std::string out_path;
    auto* c = app.add_subcommand("construct", "Build a GH(q,q) or GH(q,q^2) block matrix");
    c->add_option("--theorem", construct.theorem, "Block construction: 3.1, 3.2 or 3.3")
        ->required()
        ->check(CLI::IsMember({"3.1", "3.2", "3.3"}));
    c->add_option("--p", construct.p, "Field characteristic")->required();
    c->add_option("--n", construct.n, "Extension degree")->capture_default_str();
    c->add_option("--modulus", construct.modulus, "Monic modulus coefficients c0,...,cn")->delimiter(',');
    c->add_option("--out,-o", out_path, "Output matrix file (stdout when omitted)");
    c->add_flag("--pretty", construct.pretty, "Also print the matrix with polynomial element labels");

    VerifyArgs verify;
    std::string in_path;
    auto* v = app.add_subcommand("verify", "Brute-force check the GH property of a matrix file");
    v->add_option("in", in_path, "Matrix file")->required();
    v->add_option("--lambda", verify.lambda, "Override the header's lambda");
    v->add_option("--threads", verify.threads, "Worker threads (0 = all available)")->capture_default_str();
    v->add_flag("--all-failures", verify.all_failures, "Report every failing row pair");
    v->add_flag("--columns", verify.columns, "Also check column pairs (diagnostic)");

    ClassifyArgs classify;
    auto* k = app.add_subcommand("classify", "Count planar and additive maps over GF(p^n) exhaustively");
    k->add_option("--p", classify.p, "Field characteristic")->required();
    k->add_option("--n", classify.n, "Extension degree")->capture_default_str();
    k->add_option("--modulus", classify.modulus, "Monic modulus coefficients c0,...,cn")->delimiter(',');
    k->add_option("--threads", classify.threads, "Worker threads (0 = all available)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsageOrFormat;
    }

    if (c->parsed()) {
        if (!out_path.empty()) {
            construct.out = out_path;
        }
        return cmd_construct(construct, out, err);
    }
    if (v->parsed()) {
        verify.in = in_path;
        return cmd_verify(verify, out, err);
    }
    return cmd_classify(classify, out, err);
}

} // namespace ghforge::cli
