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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dwwt/cli/formats.h"
#include "dwwt/cli/verify.h"
#include "dwwt/random_matrices.h"
#include "dwwt/schwinger.h"
#include "gtest/gtest.h"
#include "json.hpp"

using namespace dwwt;
using namespace dwwt::cli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args, const std::string &stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string matrix_text(const ComplexMatrix &m) {
    std::ostringstream out;
    write_matrix_file(out, m);
    return out.str();
}

std::string temp_file(const std::string &name, const std::string &contents) {
    auto path = std::filesystem::temp_directory_path() / ("dwwt_cli_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST(cli, line_command) {
    CliRun r = run({"line", "--dim", "5", "--c", "0", "--q", "2", "--p", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"b", "m"}));
    EXPECT_EQ(rows[1], (std::vector<std::string>{"ddot0", "2"}));
    std::vector<std::string> ms;
    for (size_t i = 2; i < rows.size(); i++) {
        ms.push_back(rows[i][1]);
    }
    EXPECT_EQ(ms, (std::vector<std::string>{"4", "1", "3", "0", "2"}));
}

TEST(cli, wigner_command) {
    std::string path = temp_file("ket3.json", matrix_text(outer_product(ComplexVector::basis(5, 3), ComplexVector::basis(5, 3))));
    for (const char *route : {"trace", "mub", "schwinger"}) {
        CliRun r = run({"wigner", "--dim", "5", "--c", "-1/2", "--state", path, "--route", route});
        ASSERT_EQ(r.code, 0) << r.err;
        auto rows = csv_rows(r.out);
        ASSERT_EQ(rows.size(), 26u);
        EXPECT_EQ(rows[0], (std::vector<std::string>{"q", "p", "W"}));
        for (size_t i = 1; i < rows.size(); i++) {
            double w = std::stod(rows[i][2]);
            EXPECT_NEAR(w, rows[i][0] == "3" ? 1.0 : 0.0, 1e-10) << route;
        }
    }

    CliRun via_stdin = run({"wigner", "--dim", "5", "--c", "-1/2", "--state", "-"}, matrix_text(identity(5)));
    ASSERT_EQ(via_stdin.code, 0) << via_stdin.err;
    for (size_t i = 1; i < 26; i++) {
        EXPECT_NEAR(std::stod(csv_rows(via_stdin.out)[i][2]), 1.0, 1e-10);
    }

    auto out_path = std::filesystem::temp_directory_path() / "dwwt_cli_test_out.csv";
    CliRun to_file = run({"wigner", "--dim", "5", "--c", "1/3", "--state", path, "--out", out_path.string()});
    ASSERT_EQ(to_file.code, 0) << to_file.err;
    std::ifstream f(out_path);
    std::stringstream buf;
    buf << f.rdbuf();
    EXPECT_EQ(csv_rows(buf.str()).size(), 26u);
}

TEST(cli, lineop_constructions_agree) {
    for (const char *c : {"0", "-1/2", "3/2"}) {
        for (int q = 0; q < 5; q++) {
            for (int p = 0; p < 5; p++) {
                CliRun closed = run({"lineop", "--dim", "5", "--c", c, "--q", std::to_string(q), "--p", std::to_string(p)});
                CliRun mub = run({"lineop", "--dim", "5", "--c", c, "--q", std::to_string(q), "--p", std::to_string(p),
                               "--construction", "mub"});
                ASSERT_EQ(closed.code, 0) << closed.err;
                ASSERT_EQ(mub.code, 0) << mub.err;
                ComplexMatrix a = parse_matrix_text(closed.out);
                ComplexMatrix b = parse_matrix_text(mub.out);
                for (size_t i = 0; i < 5; i++) {
                    for (size_t j = 0; j < 5; j++) {
                        auto round = [](double v) { return std::round(v * 1e10) / 1e10 + 0.0; };
                        EXPECT_EQ(round(a(i, j).real()), round(b(i, j).real()));
                        EXPECT_EQ(round(a(i, j).imag()), round(b(i, j).imag()));
                    }
                }
            }
        }
    }
    CliRun r = run({"lineop", "--dim", "5", "--c", "-1/2", "--q", "0", "--p", "0"});
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["dim"], 5);
    EXPECT_EQ(j["re"][1][4], 1.0);
    EXPECT_EQ(j["re"][1][1], 0.0);
}

TEST(cli, radon_command) {
    ComplexVector k = momentum_state(2, 5);
    std::string path = temp_file("p2.json", matrix_text(outer_product(k, k)));
    CliRun r = run({"radon", "--dim", "5", "--c", "0", "--state", path, "--basis", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"m", "probability"}));
    for (size_t m = 0; m < 5; m++) {
        EXPECT_NEAR(std::stod(rows[m + 1][1]), m == 3 ? 1.0 : 0.0, 1e-10);
    }
    EXPECT_EQ(run({"radon", "--dim", "5", "--c", "0", "--state", path, "--basis", "7"}).code, kExitUnknownBasis);
    EXPECT_EQ(run({"radon", "--dim", "5", "--c", "0", "--state", path, "--basis", "ddot1"}).code, kExitUnknownBasis);
}

TEST(cli, tomo_and_probs) {
    MatrixSampler s(31);
    DensityMatrix rho = s.density(5);
    std::string state_path = temp_file("rho.json", matrix_text(rho.matrix()));

    CliRun exact = run({"tomo", "--dim", "5", "--c", "-1/2", "--state", state_path});
    ASSERT_EQ(exact.code, 0) << exact.err;
    EXPECT_LE(max_abs_diff(parse_matrix_text(exact.out), rho.matrix()), 1e-9);
    auto diag = nlohmann::json::parse(exact.out)["diagnostics"];
    EXPECT_NEAR(diag["trace_re"].get<double>(), 1.0, 1e-10);
    EXPECT_GT(diag["min_eigenvalue"].get<double>(), 0.0);

    CliRun a = run({"tomo", "--dim", "5", "--c", "0", "--state", state_path, "--shots", "1000", "--seed", "9"});
    CliRun b = run({"tomo", "--dim", "5", "--c", "0", "--state", state_path, "--shots", "1000", "--seed", "9"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);

    CliRun probs = run({"probs", "--dim", "5", "--state", state_path});
    ASSERT_EQ(probs.code, 0) << probs.err;
    std::string rec_path = temp_file("rec.json", probs.out);
    CliRun from_file = run({"tomo", "--dim", "5", "--c", "0", "--probs", rec_path});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_LE(max_abs_diff(parse_matrix_text(from_file.out), rho.matrix()), 1e-9);
    CliRun from_stdin = run({"tomo", "--dim", "5", "--c", "0", "--probs", "-"}, probs.out);
    EXPECT_EQ(from_stdin.out, from_file.out);

    CliRun sampled = run({"probs", "--dim", "5", "--state", state_path, "--shots", "50", "--seed", "3"});
    ASSERT_EQ(sampled.code, 0);
    EXPECT_EQ(nlohmann::json::parse(sampled.out)["shots"], 50);

    EXPECT_EQ(run({"tomo", "--dim", "5", "--c", "0", "--state", state_path, "--shots", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"tomo", "--dim", "5", "--c", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"tomo", "--dim", "7", "--c", "0", "--probs", rec_path}).code, kExitDimension);
}

TEST(cli, record_parsing) {
    EXPECT_EQ(run({"tomo", "--dim", "3", "--c", "0", "--probs", "-"}, "{not json").code, kExitParse);
    // Missing a basis.
    std::string short_rec = R"({"dim":3,"entries":[{"basis":"ddot0","probs":[1,0,0]},{"basis":0,"probs":[1,0,0]}]})";
    EXPECT_EQ(run({"tomo", "--dim", "3", "--c", "0", "--probs", "-"}, short_rec).code, kExitParse);
    std::string bad_label = R"({"dim":3,"entries":[{"basis":"x","probs":[1,0,0]}]})";
    int code = run({"tomo", "--dim", "3", "--c", "0", "--probs", "-"}, bad_label).code;
    EXPECT_TRUE(code == kExitParse || code == kExitUnknownBasis) << code;
}

TEST(cli, error_exit_codes) {
    EXPECT_EQ(run({"verify", "--dim", "9", "--c", "0"}).code, kExitDimension);
    EXPECT_EQ(run({"verify", "--dim", "2", "--c", "0"}).code, kExitDimension);
    EXPECT_EQ(run({"lineop", "--dim", "4", "--c", "0", "--q", "0", "--p", "0"}).code, kExitDimension);
    EXPECT_EQ(run({"verify", "--dim", "5", "--c", "1/5"}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"wigner", "--dim", "5", "--c", "0", "--state", "-"}, "[1,2").code, kExitParse);
    EXPECT_EQ(run({"wigner", "--dim", "5", "--c", "0", "--state", "/nonexistent/x.json"}).code, kExitParse);
    EXPECT_EQ(run({"wigner", "--dim", "3", "--c", "0", "--state", "-"}, matrix_text(identity(5))).code,
              kExitDimension);

    ComplexMatrix skew = identity(3);
    skew(0, 1) = Complex(0, 1);
    CliRun r = run({"wigner", "--dim", "3", "--c", "0", "--state", "-"}, matrix_text(skew));
    EXPECT_EQ(r.code, kExitNonHermitian);
    EXPECT_FALSE(r.err.empty());
}

TEST(cli, verify_command) {
    CliRun r = run({"verify", "--dim", "5", "--c", "-1/2"});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.rfind("# N=5 c=-1/2 (Mod value 2)", 0), 0u);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

    CliRun c0 = run({"verify", "--dim", "5", "--c", "0"});
    EXPECT_EQ(c0.code, 0);
    EXPECT_NE(c0.out.find("SKIPPED"), std::string::npos);

    // A check outside tolerance fails the whole run.
    std::vector<CheckResult> checks = {{"a", CheckStatus::Pass, 0, 1, ""}, {"b", CheckStatus::Fail, 1, 0, ""}};
    EXPECT_FALSE(all_passed(checks));
    checks[1].status = CheckStatus::Skipped;
    EXPECT_TRUE(all_passed(checks));
    std::ostringstream out;
    print_checks(out, checks);
    EXPECT_NE(out.str().find("PASS"), std::string::npos);
}

TEST(cli, format_double) {
    EXPECT_EQ(format_double(0.0), "0");
    EXPECT_EQ(format_double(-0.0), "0");
    EXPECT_EQ(format_double(0.2), "0.2");
    EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(cli, matrix_round_trip) {
    MatrixSampler s(2);
    ComplexMatrix h = s.hermitian(7);
    EXPECT_EQ(parse_matrix_text(matrix_text(h)), h);
    EXPECT_THROW(parse_matrix_text(R"({"dim":2,"re":[[1,0]],"im":[[0,0],[0,0]]})"), Error);
}
