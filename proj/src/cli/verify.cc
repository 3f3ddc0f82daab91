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

#include "dwwt/cli/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>

#include "dwwt/cli/formats.h"
#include "dwwt/random_matrices.h"
#include "dwwt/schwinger.h"
#include "dwwt/tomography.h"
#include "dwwt/wigner.h"

namespace dwwt::cli {

namespace {

CheckResult measured(std::string name, double residual, double tol) {
    CheckStatus status = residual <= tol ? CheckStatus::Pass : CheckStatus::Fail;
    return CheckResult{std::move(name), status, residual, tol, ""};
}

double table_diff(const WignerTable &a, const WignerTable &b) {
    double m = 0;
    for (size_t i = 0; i < a.values().size(); i++) {
        m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
    }
    return m;
}

struct Context {
    PhaseParam c;
    int64_t n;
    size_t d;
    const LineOperatorSet &ops;
    std::vector<ComplexMatrix> hermitian;
    std::vector<DensityMatrix> densities;
};

CheckResult check_line_operators(const Context &ctx) {
    double r = 0;
    for (const auto &p : ctx.ops.ops) {
        r = std::max(r, hermiticity_residue(p));
        r = std::max(r, std::abs(trace(p) - Complex(1.0)));
    }
    return measured("line_operator_hermitian_unit_trace", r, 1e-10);
}

CheckResult check_orthogonality(const Context &ctx) {
    double r = 0;
    size_t count = ctx.ops.ops.size();
    for (size_t i = 0; i < count; i++) {
        for (size_t j = 0; j < count; j++) {
            Complex v = trace_of_product(ctx.ops.ops[i], ctx.ops.ops[j]) / static_cast<double>(ctx.d);
            r = std::max(r, std::abs(v - Complex(i == j ? 1.0 : 0.0)));
        }
    }
    return measured("orthogonality", r, 1e-9);
}

CheckResult check_closure(const Context &ctx) {
    ComplexMatrix sum(ctx.d);
    for (const auto &p : ctx.ops.ops) {
        sum += p;
    }
    sum *= 1.0 / static_cast<double>(ctx.d);
    return measured("closure", max_abs_diff(sum, identity(ctx.d)), 1e-10);
}

CheckResult check_construction_equivalence(const Context &ctx) {
    double r = 0;
    for (int64_t q = 0; q < ctx.n; q++) {
        for (int64_t p = 0; p < ctx.n; p++) {
            PhasePoint point = PhasePoint::make(q, p, ctx.n);
            r = std::max(
                r, max_abs_diff(line_operator_mub(point, ctx.c).matrix, line_operator_closed(point, ctx.c).matrix));
        }
    }
    return measured("construction_equivalence", r, 1e-10);
}

CheckResult check_unit_operator(const Context &ctx) {
    WignerTable w = wwt_trace(identity(ctx.d), ctx.c);
    double r = 0;
    for (double v : w.values()) {
        r = std::max(r, std::abs(v - 1.0));
    }
    return measured("unit_operator", r, 1e-10);
}

CheckResult check_normalization(const Context &ctx) {
    double r = 0;
    for (const auto &rho : ctx.densities) {
        r = std::max(r, std::abs(wwt_trace(rho.matrix(), ctx.c).normalization() - 1.0));
    }
    return measured("normalization", r, 1e-10);
}

CheckResult check_realness(const Context &ctx) {
    double r = 0;
    for (const auto &a : ctx.hermitian) {
        for (const auto &p : ctx.ops.ops) {
            r = std::max(r, std::abs(trace_of_product(a, p).imag()));
        }
    }
    return measured("realness", r, 1e-10);
}

CheckResult check_route(const Context &ctx, const char *name, WignerTable (*route)(const ComplexMatrix &, const PhaseParam &, double)) {
    double r = 0;
    for (const auto &a : ctx.hermitian) {
        r = std::max(r, table_diff(wwt_trace(a, ctx.c), route(a, ctx.c, kImagTol)));
    }
    return measured(name, r, 1e-9);
}

CheckResult check_round_trip(const Context &ctx) {
    double r = 0;
    for (const auto &a : ctx.hermitian) {
        r = std::max(r, max_abs_diff(inverse_wwt(wwt_trace(a, ctx.c)), a));
    }
    return measured("inverse_round_trip", r, 1e-9);
}

CheckResult check_product_formula(const Context &ctx) {
    double r = 0;
    for (size_t i = 0; i + 1 < ctx.hermitian.size(); i++) {
        const auto &a = ctx.hermitian[i];
        const auto &b = ctx.hermitian[i + 1];
        double lhs = overlap(wwt_trace(a, ctx.c), wwt_trace(b, ctx.c));
        r = std::max(r, std::abs(lhs - trace_of_product(a, b).real()));
    }
    return measured("product_formula", r, 1e-9);
}

CheckResult check_marginality(const Context &ctx) {
    double r = 0;
    for (const auto &rho : ctx.densities) {
        WignerTable w = wwt_trace(rho.matrix(), ctx.c);
        MeasurementRecord born = simulate_probs(rho);
        for (const auto &label : BasisLabel::all(ctx.n)) {
            auto marginal = radon(w, label);
            for (size_t m = 0; m < ctx.d; m++) {
                r = std::max(r, std::abs(marginal[m] - born.at(label)[m]));
            }
        }
    }
    return measured("marginality_radon", r, 1e-9);
}

CheckResult check_standard_marginals(const Context &ctx) {
    double r = 0;
    for (const auto &rho : ctx.densities) {
        WignerTable w = wwt_trace(rho.matrix(), ctx.c);
        for (size_t k = 0; k < ctx.d; k++) {
            double row = 0;
            double col = 0;
            for (size_t j = 0; j < ctx.d; j++) {
                row += w(k, j);
                col += w(j, k);
            }
            row /= static_cast<double>(ctx.d);
            col /= static_cast<double>(ctx.d);
            ComplexVector mom = momentum_state(static_cast<int64_t>(k), ctx.n);
            double pos_prob = rho.matrix()(k, k).real();
            double mom_prob = inner_product(mom, mat_vec(rho.matrix(), mom)).real();
            r = std::max({r, std::abs(row - pos_prob), std::abs(col - mom_prob)});
        }
    }
    return measured("standard_marginals", r, 1e-9);
}

CheckResult check_parity_square(const Context &ctx) {
    double r = 0;
    for (int64_t q = 0; q < ctx.n; q++) {
        for (int64_t p = 0; p < ctx.n; p++) {
            ComplexMatrix pi = parity_op(PhasePoint::make(q, p, ctx.n));
            r = std::max(r, max_abs_diff(mat_mul(pi, pi), identity(ctx.d)));
        }
    }
    return measured("parity_square", r, 1e-10);
}

CheckResult check_parity_identification(const Context &ctx) {
    if (!ctx.c.is_minus_half()) {
        return CheckResult{
            "parity_identification", CheckStatus::Skipped, 0.0, 1e-10, "holds only at c=-1/2; c=" + ctx.c.display()};
    }
    double r = 0;
    for (int64_t q = 0; q < ctx.n; q++) {
        for (int64_t p = 0; p < ctx.n; p++) {
            const ComplexMatrix &line_op = ctx.ops.at(static_cast<size_t>(q), static_cast<size_t>(p));
            r = std::max(r, max_abs_diff(line_op, parity_op(PhasePoint::make(q, p, ctx.n))));
            r = std::max(r, max_abs_diff(mat_mul(line_op, line_op), identity(ctx.d)));
        }
    }
    return measured("parity_identification", r, 1e-10);
}

CheckResult check_unbiasedness(const Context &ctx) {
    const MubTable &table = mub_table(ctx.n);
    double r = 0;
    for (size_t b1 = 0; b1 <= ctx.d; b1++) {
        for (size_t b2 = 0; b2 <= ctx.d; b2++) {
            for (size_t m1 = 0; m1 < ctx.d; m1++) {
                for (size_t m2 = 0; m2 < ctx.d; m2++) {
                    double expected = b1 != b2 ? 1.0 / static_cast<double>(ctx.d) : (m1 == m2 ? 1.0 : 0.0);
                    double got = overlap_magnitude_sq(table.at(b1, m1), table.at(b2, m2));
                    r = std::max(r, std::abs(got - expected));
                }
            }
        }
    }
    return measured("mub_unbiasedness", r, 1e-10);
}

/// Counts, over all pairs of distinct lines, the pairs that do not share
/// exactly one point or whose computed intersection disagrees with the
/// brute-force one.
std::vector<CheckResult> check_geometry(const Context &ctx) {
    std::vector<Line> lines = enumerate_lines(ctx.c);
    double intersection_failures = 0;
    double formula_failures = 0;
    for (size_t i = 0; i < lines.size(); i++) {
        for (size_t j = i + 1; j < lines.size(); j++) {
            size_t shared = 0;
            size_t shared_index = 0;
            for (size_t b = 0; b <= ctx.d; b++) {
                if (lines[i].at_index(b) == lines[j].at_index(b)) {
                    shared++;
                    shared_index = b;
                }
            }
            if (shared != 1) {
                intersection_failures++;
                continue;
            }
            auto [label, m] = line_intersection(lines[i], lines[j]);
            if (label.index() != shared_index || !(m == lines[i].at_index(shared_index))) {
                formula_failures++;
            }
        }
    }
    std::map<std::pair<size_t, int64_t>, size_t> incidence;
    for (const auto &line : lines) {
        for (size_t b = 0; b <= ctx.d; b++) {
            incidence[{b, line.at_index(b).value()}]++;
        }
    }
    double incidence_failures = incidence.size() == ctx.d * (ctx.d + 1) ? 0 : 1;
    for (const auto &[point, count] : incidence) {
        if (count != ctx.d) {
            incidence_failures++;
        }
    }
    if (lines.size() != ctx.d * ctx.d) {
        incidence_failures++;
    }
    return {
        measured("line_unique_intersection", intersection_failures, 0),
        measured("line_intersection_formula", formula_failures, 0),
        measured("line_incidence", incidence_failures, 0),
    };
}

}  // namespace

std::vector<CheckResult> run_verification(const PhaseParam &c, const VerifyOptions &options) {
    int64_t n = c.modulus();
    size_t d = static_cast<size_t>(n);
    MatrixSampler sampler(options.seed);
    Context ctx{c, n, d, line_operators(c), {}, {}};
    for (size_t i = 0; i < options.random_samples; i++) {
        ctx.hermitian.push_back(sampler.hermitian(d));
        ctx.densities.push_back(sampler.density(d));
    }

    std::vector<CheckResult> out;
    out.push_back(check_line_operators(ctx));
    out.push_back(check_orthogonality(ctx));
    out.push_back(check_closure(ctx));
    out.push_back(check_construction_equivalence(ctx));
    out.push_back(check_unit_operator(ctx));
    out.push_back(check_normalization(ctx));
    out.push_back(check_realness(ctx));
    out.push_back(check_route(ctx, "route_equivalence_mub", wwt_mub));
    out.push_back(check_round_trip(ctx));
    out.push_back(check_product_formula(ctx));
    out.push_back(check_marginality(ctx));
    out.push_back(check_standard_marginals(ctx));
    out.push_back(check_parity_square(ctx));
    out.push_back(check_parity_identification(ctx));
    if (options.deep) {
        out.push_back(check_route(ctx, "route_equivalence_schwinger", wwt_schwinger));
        out.push_back(check_unbiasedness(ctx));
        for (auto &r : check_geometry(ctx)) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

void print_checks(std::ostream &out, const std::vector<CheckResult> &checks) {
    for (const auto &c : checks) {
        switch (c.status) {
            case CheckStatus::Pass:
                out << "PASS    ";
                break;
            case CheckStatus::Fail:
                out << "FAIL    ";
                break;
            case CheckStatus::Skipped:
                out << "SKIPPED ";
                break;
        }
        out << c.name;
        if (c.status != CheckStatus::Skipped) {
            out << " max_residual=" << format_double(c.max_residual) << " tol=" << format_double(c.tol);
        }
        if (!c.note.empty()) {
            out << " note=\"" << c.note << "\"";
        }
        out << "\n";
    }
}

bool all_passed(const std::vector<CheckResult> &checks) {
    return std::none_of(
        checks.begin(), checks.end(), [](const CheckResult &c) { return c.status == CheckStatus::Fail; });
}

}  // namespace dwwt::cli
