// Copyright 2026 The dwwt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dwwt/cli/commands.h"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "dwwt/cli/formats.h"
#include "dwwt/cli/verify.h"
#include "dwwt/lines.h"
#include "dwwt/tomography.h"
#include "dwwt/wigner.h"

namespace dwwt::cli {

namespace {

/// Hermiticity demanded of user-supplied operators before the transform.
constexpr double kInputHermitianTol = 1e-8;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CommonArgs {
    int64_t dim = 0;
    std::string c = "0";
};

void add_common(CLI::App *sub, CommonArgs &args) {
    sub->add_option("--dim", args.dim, "Hilbert-space dimension N (odd prime)")->required();
    sub->add_option("--c", args.c, "Phase parameter as a rational a or a/b, e.g. 0, -1/2, 3/2")->required();
}

PhaseParam common_param(const CommonArgs &args) {
    check_dimension(args.dim);
    return PhaseParam::parse(args.c, args.dim);
}

ComplexMatrix load_matrix(const std::string &path, std::istream &in) {
    if (path == "-") {
        return read_matrix_file(in);
    }
    std::ifstream file(path);
    if (!file) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    return read_matrix_file(file);
}

MeasurementRecord load_record(const std::string &path, std::istream &in) {
    if (path == "-") {
        return read_record_file(in);
    }
    std::ifstream file(path);
    if (!file) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    return read_record_file(file);
}

/// Reads a state file, checks its size against N and its Hermiticity, and
/// returns the Hermitian part.
ComplexMatrix load_hermitian(const std::string &path, std::istream &in, int64_t dim) {
    ComplexMatrix a = load_matrix(path, in);
    if (a.dim() != static_cast<size_t>(dim)) {
        throw Error(
            ErrorCode::DimensionMismatch,
            "state is " + std::to_string(a.dim()) + "-dimensional but --dim is " + std::to_string(dim));
    }
    double residue = hermiticity_residue(a);
    if (residue > kInputHermitianTol) {
        throw Error(
            ErrorCode::NonHermitianInput,
            "state is not Hermitian (residue " + format_double(residue) + " > " + format_double(kInputHermitianTol) +
                ")");
    }
    return hermitian_part(a);
}

void write_wigner_csv(std::ostream &out, const WignerTable &w) {
    out << "q,p,W\n";
    for (size_t q = 0; q < w.dim(); q++) {
        for (size_t p = 0; p < w.dim(); p++) {
            out << q << "," << p << "," << format_double(w(q, p)) << "\n";
        }
    }
}

struct WignerArgs {
    CommonArgs common;
    std::string state;
    std::string route = "trace";
    std::string out_path;
};

int cmd_wigner(const WignerArgs &args, std::istream &in, std::ostream &out) {
    PhaseParam c = common_param(args.common);
    ComplexMatrix a = load_hermitian(args.state, in, args.common.dim);
    std::optional<WignerTable> w;
    if (args.route == "trace") {
        w = wwt_trace(a, c);
    } else if (args.route == "mub") {
        w = wwt_mub(a, c);
    } else {
        w = wwt_schwinger(a, c);
    }
    if (args.out_path.empty()) {
        write_wigner_csv(out, *w);
    } else {
        std::ofstream file(args.out_path);
        if (!file) {
            throw UsageError("cannot write '" + args.out_path + "'");
        }
        write_wigner_csv(file, *w);
    }
    return kExitOk;
}

struct PointArgs {
    CommonArgs common;
    int64_t q = 0;
    int64_t p = 0;
    std::string construction = "closed";
};

int cmd_lineop(const PointArgs &args, std::ostream &out) {
    PhaseParam c = common_param(args.common);
    PhasePoint point = PhasePoint::make(args.q, args.p, args.common.dim);
    LineOperator op = args.construction == "mub" ? line_operator_mub(point, c) : line_operator_closed(point, c);
    write_matrix_file(out, op.matrix);
    return kExitOk;
}

int cmd_line(const PointArgs &args, std::ostream &out) {
    PhaseParam c = common_param(args.common);
    Line line = line_points(PhasePoint::make(args.q, args.p, args.common.dim), c);
    out << "b,m\n";
    for (const auto &label : BasisLabel::all(args.common.dim)) {
        out << label.str() << "," << line.at(label).value() << "\n";
    }
    return kExitOk;
}

struct RadonArgs {
    CommonArgs common;
    std::string state;
    std::string basis;
};

int cmd_radon(const RadonArgs &args, std::istream &in, std::ostream &out) {
    PhaseParam c = common_param(args.common);
    BasisLabel label = BasisLabel::parse(args.basis, args.common.dim);
    ComplexMatrix a = load_hermitian(args.state, in, args.common.dim);
    std::vector<double> marginal = radon(wwt_trace(a, c), label);
    out << "m,probability\n";
    for (size_t m = 0; m < marginal.size(); m++) {
        out << m << "," << format_double(marginal[m]) << "\n";
    }
    return kExitOk;
}

struct SampleArgs {
    CommonArgs common;
    std::string probs;
    std::string state;
    std::optional<int64_t> shots;
    uint64_t seed = 1;
};

MeasurementRecord record_from_state(const SampleArgs &args, std::istream &in) {
    ComplexMatrix a = load_hermitian(args.state, in, args.common.dim);
    DensityMatrix rho(a, kInputHermitianTol);
    if (!args.shots) {
        return simulate_probs(rho);
    }
    if (*args.shots < 1) {
        throw UsageError("--shots must be at least 1");
    }
    return sample_probs(rho, static_cast<uint64_t>(*args.shots), args.seed);
}

int cmd_tomo(const SampleArgs &args, std::istream &in, std::ostream &out) {
    PhaseParam c = common_param(args.common);
    if (args.probs.empty() == args.state.empty()) {
        throw UsageError("give exactly one of --probs or --state");
    }
    MeasurementRecord rec{0, {}, std::nullopt};
    if (!args.probs.empty()) {
        if (args.shots) {
            throw UsageError("--shots only applies with --state");
        }
        rec = load_record(args.probs, in);
        if (rec.dim != args.common.dim) {
            throw Error(
                ErrorCode::DimensionMismatch,
                "record has dim " + std::to_string(rec.dim) + " but --dim is " + std::to_string(args.common.dim));
        }
        // Files may carry rounding up to 1e-6 per basis; renormalize so the
        // reconstruction has unit trace.
        for (auto &row : rec.probs) {
            double s = 0;
            for (double v : row) {
                s += v;
            }
            for (double &v : row) {
                v /= s;
            }
        }
    } else {
        rec = record_from_state(args, in);
    }
    DensityMatrix rho = reconstruct(rec, c);
    write_matrix_file(out, rho.matrix(), diagnose(rho.matrix()));
    return kExitOk;
}

int cmd_probs(const SampleArgs &args, std::istream &in, std::ostream &out) {
    check_dimension(args.common.dim);
    write_record_file(out, record_from_state(args, in));
    return kExitOk;
}

struct VerifyArgs {
    CommonArgs common;
    bool deep = false;
    uint64_t seed = VerifyOptions{}.seed;
};

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
    PhaseParam c = common_param(args.common);
    VerifyOptions options;
    options.deep = args.deep;
    options.seed = args.seed;
    auto checks = run_verification(c, options);
    out << "# N=" << args.common.dim << " c=" << c.display() << " (Mod value " << c.value().value() << ")"
        << (args.deep ? " deep" : "") << "\n";
    print_checks(out, checks);
    return all_passed(checks) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidRecord:
            return kExitParse;
        case ErrorCode::CompositeDimension:
        case ErrorCode::UnsupportedDimension:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::ModulusMismatch:
        case ErrorCode::MixedParameters:
            return kExitDimension;
        case ErrorCode::NonHermitianInput:
        case ErrorCode::InvalidDensityMatrix:
            return kExitNonHermitian;
        case ErrorCode::UnknownBasisLabel:
            return kExitUnknownBasis;
        default:
            return kExitUsage;
    }
}

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Discrete Weyl-Wigner transforms on prime-dimensional Hilbert spaces"};
    app.require_subcommand(1);

    WignerArgs wigner_args;
    auto *wigner = app.add_subcommand("wigner", "Emit the Wigner table of an operator as CSV q,p,W");
    add_common(wigner, wigner_args.common);
    wigner->add_option("--state", wigner_args.state, "MatrixFile path, or - for stdin")->required();
    wigner->add_option("--route", wigner_args.route, "trace | mub | schwinger")
        ->check(CLI::IsMember({"trace", "mub", "schwinger"}));
    wigner->add_option("--out", wigner_args.out_path, "Write CSV here instead of stdout");

    PointArgs lineop_args;
    auto *lineop = app.add_subcommand("lineop", "Emit the line operator P(q,p) as a MatrixFile");
    add_common(lineop, lineop_args.common);
    lineop->add_option("--q", lineop_args.q)->required();
    lineop->add_option("--p", lineop_args.p)->required();
    lineop->add_option("--construction", lineop_args.construction, "closed | mub")
        ->check(CLI::IsMember({"closed", "mub"}));

    PointArgs line_args;
    auto *line = app.add_subcommand("line", "Emit the line through (q,p) in the b-m plane as CSV b,m");
    add_common(line, line_args.common);
    line->add_option("--q", line_args.q)->required();
    line->add_option("--p", line_args.p)->required();

    RadonArgs radon_args;
    auto *radon_cmd = app.add_subcommand("radon", "Emit the Radon marginal of a state in one basis as CSV");
    add_common(radon_cmd, radon_args.common);
    radon_cmd->add_option("--state", radon_args.state, "MatrixFile path, or - for stdin")->required();
    radon_cmd->add_option("--basis", radon_args.basis, "ddot0 or a slope 0..N-1")->required();

    SampleArgs tomo_args;
    auto *tomo = app.add_subcommand("tomo", "Reconstruct a density matrix from MUB probabilities");
    add_common(tomo, tomo_args.common);
    tomo->add_option("--probs", tomo_args.probs, "RecordFile path, or - for stdin");
    tomo->add_option("--state", tomo_args.state, "Simulate the record from this MatrixFile");
    tomo->add_option("--shots", tomo_args.shots, "Draws per basis (omit for exact probabilities)");
    tomo->add_option("--seed", tomo_args.seed, "Sampling seed");

    SampleArgs probs_args;
    auto *probs = app.add_subcommand("probs", "Emit the MUB measurement record of a state as a RecordFile");
    probs->add_option("--dim", probs_args.common.dim)->required();
    probs->add_option("--state", probs_args.state, "MatrixFile path, or - for stdin")->required();
    probs->add_option("--shots", probs_args.shots, "Draws per basis (omit for exact probabilities)");
    probs->add_option("--seed", probs_args.seed, "Sampling seed");

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "Check every phase-space identity for one (N, c)");
    add_common(verify, verify_args.common);
    verify->add_flag("--deep", verify_args.deep, "Add the Schwinger route, MUB and line-geometry checks");
    verify->add_option("--seed", verify_args.seed, "Seed for the random test operators");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (wigner->parsed()) {
            return cmd_wigner(wigner_args, in, out);
        }
        if (lineop->parsed()) {
            return cmd_lineop(lineop_args, out);
        }
        if (line->parsed()) {
            return cmd_line(line_args, out);
        }
        if (radon_cmd->parsed()) {
            return cmd_radon(radon_args, in, out);
        }
        if (tomo->parsed()) {
            return cmd_tomo(tomo_args, in, out);
        }
        if (probs->parsed()) {
            return cmd_probs(probs_args, in, out);
        }
        return cmd_verify(verify_args, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace dwwt::cli
