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

#include "dwwt/cli/formats.h"

#include <charconv>
#include <iostream>
#include <iterator>
#include <json.hpp>

#include "dwwt/error.h"

namespace dwwt::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
    throw Error(ErrorCode::ParseError, what);
}

std::string slurp(std::istream &in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

json parse_json(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        parse_fail(e.what());
    }
}

size_t read_dim(const json &doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer()) {
        parse_fail("missing integer field \"dim\"");
    }
    int64_t dim = doc["dim"].get<int64_t>();
    if (dim < 1) {
        parse_fail("\"dim\" must be positive");
    }
    return static_cast<size_t>(dim);
}

std::vector<double> read_reals(const json &arr, size_t expected, const std::string &where) {
    if (!arr.is_array() || arr.size() != expected) {
        parse_fail(where + " must be an array of " + std::to_string(expected) + " numbers");
    }
    std::vector<double> out;
    out.reserve(expected);
    for (const auto &v : arr) {
        if (!v.is_number()) {
            parse_fail(where + " contains a non-number");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

json real_part_rows(const ComplexMatrix &m, bool imag) {
    json rows = json::array();
    for (size_t i = 0; i < m.dim(); i++) {
        json row = json::array();
        for (size_t j = 0; j < m.dim(); j++) {
            double v = imag ? m(i, j).imag() : m(i, j).real();
            row.push_back(v == 0.0 ? 0.0 : v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string format_double(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

ComplexMatrix parse_matrix_text(const std::string &text) {
    json doc = parse_json(text);
    size_t n = read_dim(doc);
    for (const char *key : {"re", "im"}) {
        if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != n) {
            parse_fail(std::string("\"") + key + "\" must have " + std::to_string(n) + " rows");
        }
    }
    ComplexMatrix m(n);
    for (size_t i = 0; i < n; i++) {
        auto re = read_reals(doc["re"][i], n, "re row " + std::to_string(i));
        auto im = read_reals(doc["im"][i], n, "im row " + std::to_string(i));
        for (size_t j = 0; j < n; j++) {
            m(i, j) = Complex(re[j], im[j]);
        }
    }
    return m;
}

ComplexMatrix read_matrix_file(std::istream &in) {
    return parse_matrix_text(slurp(in));
}

void write_matrix_file(
    std::ostream &out, const ComplexMatrix &m, const std::optional<ReconstructionDiagnostics> &diagnostics) {
    json doc;
    doc["dim"] = m.dim();
    doc["re"] = real_part_rows(m, false);
    doc["im"] = real_part_rows(m, true);
    if (diagnostics) {
        doc["diagnostics"] = {
            {"trace_re", diagnostics->trace.real()},
            {"trace_im", diagnostics->trace.imag()},
            {"hermiticity_residue", diagnostics->hermiticity_residue},
            {"min_eigenvalue", diagnostics->min_eigenvalue},
        };
    }
    out << doc.dump(2) << "\n";
}

MeasurementRecord parse_record_text(const std::string &text) {
    json doc = parse_json(text);
    size_t n = read_dim(doc);
    int64_t dim = static_cast<int64_t>(n);
    check_dimension(dim);
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        parse_fail("missing array field \"entries\"");
    }
    const json &entries = doc["entries"];
    if (entries.size() != n + 1) {
        parse_fail("expected " + std::to_string(n + 1) + " entries, got " + std::to_string(entries.size()));
    }
    MeasurementRecord rec{dim, std::vector<std::vector<double>>(n + 1), std::nullopt};
    std::vector<bool> seen(n + 1, false);
    for (const auto &entry : entries) {
        if (!entry.is_object() || !entry.contains("basis") || !entry.contains("probs")) {
            parse_fail("each entry needs \"basis\" and \"probs\"");
        }
        const json &basis = entry["basis"];
        std::string label_text;
        if (basis.is_string()) {
            label_text = basis.get<std::string>();
        } else if (basis.is_number_integer()) {
            label_text = std::to_string(basis.get<int64_t>());
        } else {
            parse_fail("\"basis\" must be \"ddot0\" or an integer");
        }
        size_t index = 0;
        try {
            index = BasisLabel::parse(label_text, dim).index();
        } catch (const Error &e) {
            parse_fail(e.what());
        }
        if (seen[index]) {
            parse_fail("duplicate entry for basis " + label_text);
        }
        seen[index] = true;
        rec.probs[index] = read_reals(entry["probs"], n, "probs of basis " + label_text);
    }
    if (doc.contains("shots")) {
        if (!doc["shots"].is_number_unsigned()) {
            parse_fail("\"shots\" must be a nonnegative integer");
        }
        rec.sample_count = doc["shots"].get<uint64_t>();
    }
    try {
        rec.validate(1e-6);
    } catch (const Error &e) {
        parse_fail(e.what());
    }
    return rec;
}

MeasurementRecord read_record_file(std::istream &in) {
    return parse_record_text(slurp(in));
}

void write_record_file(std::ostream &out, const MeasurementRecord &rec) {
    json doc;
    doc["dim"] = rec.dim;
    if (rec.sample_count) {
        doc["shots"] = *rec.sample_count;
    }
    json entries = json::array();
    for (size_t b = 0; b < rec.probs.size(); b++) {
        BasisLabel label = BasisLabel::from_index(b, rec.dim);
        json basis = label.is_reference() ? json("ddot0") : json(label.slope().value());
        entries.push_back({{"basis", basis}, {"probs", rec.probs[b]}});
    }
    doc["entries"] = std::move(entries);
    out << doc.dump(2) << "\n";
}

}  // namespace dwwt::cli
