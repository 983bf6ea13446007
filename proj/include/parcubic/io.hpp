/*
   Copyright 2026 The parcubic Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PARCUBIC_IO_HPP
#define PARCUBIC_IO_HPP

// JSON forms of the library types. Indices are 1-based in every file format.

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "canonical.hpp"
#include "metrised.hpp"
#include "surface.hpp"

namespace parcubic {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------------------------
// writers

inline json to_json(const Rational& q) { return format_rational(q); }

inline json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(format_rational(x));
    return a;
}

inline json to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

inline json to_json(const Signature& s) { return json::array({s.positives, s.negatives}); }

inline json algebra_json(const Algebra& a, const std::optional<Matrix>& gamma) {
    json j;
    j["dim"] = a.dim();
    json ks = json::array();
    for (const auto& c : a.constants())
        ks.push_back(json::array({c.alpha + 1, c.beta + 1, c.delta + 1, format_rational(c.value)}));
    j["k"] = ks;
    if (gamma) j["gamma"] = to_json(*gamma);
    return j;
}

inline json to_json(const MetrisedAlgebra& m) { return algebra_json(m.algebra(), m.gamma()); }

inline json to_json(const Polynomial& p) {
    json j;
    j["nvars"] = p.nvars();
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", format_rational(c)}});
    j["terms"] = terms;
    return j;
}

inline json to_json(const Partition& s) {
    json a = json::array();
    for (const auto& blk : s.blocks) {
        json b = json::array();
        for (auto i : blk) b.push_back(i + 1);
        a.push_back(b);
    }
    return a;
}

inline json to_json(const CanonicalResult& r) {
    json j;
    j["basis_change"] = to_json(r.basis_change);
    j["algebra"] = to_json(r.result);
    j["partition"] = to_json(r.partition);
    j["non_unit_diagonal"] = r.non_unit_diagonal;
    return j;
}

inline json to_json(const Surface& s) {
    json j;
    j["mode"] = to_string(s.mode());
    j["polynomial"] = to_string(s.F());
    j["nvars"] = s.dim();
    j["terms"] = to_json(s.F())["terms"];
    if (s.source()) j["algebra"] = to_json(*s.source());
    return j;
}

inline json to_json(const SplitReport& r) {
    json j;
    j["found"] = r.found;
    if (!r.found) return j;
    j["criterion"] = r.criterion;
    json a = json::array(), b = json::array();
    for (auto i : r.block_a) a.push_back(i + 1);
    for (auto i : r.block_b) b.push_back(i + 1);
    j["block_a"] = a;
    j["block_b"] = b;
    j["basis"] = to_json(r.basis);
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

inline json to_json(const ValidationReport& r) {
    json j;
    j["jordan"] = r.jordan;
    j["associative"] = r.associative;
    j["trace_form"] = r.trace_form;
    j["nilpotent"] = r.nilpotent;
    j["signature"] = to_json(r.signature);
    j["flipped_signature"] = to_json(r.flipped_signature);
    j["det_gamma"] = format_rational(r.det_gamma);
    j["splits"] = to_json(r.splits);
    j["failures"] = r.failures;
    return j;
}

inline json to_json(const BoundReport& r) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["bound"] = r.bound;
    j["dimension_bound"] = r.dimension_bound;
    j["two_blocks"] = r.two_blocks;
    j["two_block_threshold"] = r.two_block_threshold;
    return j;
}

inline json to_json(const VerificationReport& r) {
    json j;
    j["pde"] = to_string(r.pde);
    j["seed"] = r.seed;
    j["symbolic"] = r.symbolic;
    if (r.symbolic) {
        j["identity"] = r.symbolic_identity;
    } else {
        json pts = json::array();
        for (const auto& p : r.points)
            pts.push_back({{"index", p.index}, {"point", to_json(p.point)}, {"max_abs_residual", format_rational(p.max_abs_residual)}});
        j["points"] = pts;
        j["skipped"] = r.skipped;
    }
    j["passed"] = r.passed();
    return j;
}

// ---------------------------------------------------------------------------------------------
// readers

namespace detail {

inline std::string where(const std::string& field) { return field.empty() ? "" : " (field " + field + ")"; }

inline Rational rational_from_json(const json& j, const std::string& field) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + where(field));
    }
    throw ParseError("expected a rational \"p/q\" string or an integer" + where(field));
}

inline std::size_t index_from_json(const json& j, std::size_t n, const std::string& field) {
    if (!j.is_number_integer()) throw ParseError("expected an integer index" + where(field));
    const long long v = j.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > n)
        throw ParseError("index " + std::to_string(v) + " outside 1.." + std::to_string(n) + where(field));
    return static_cast<std::size_t>(v - 1);
}

}  // namespace detail

inline Matrix matrix_from_json(const json& j, const std::string& field = "matrix") {
    if (!j.is_array()) throw ParseError("expected an array of rows" + detail::where(field));
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string fi = field + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged or non-array row" + detail::where(fi));
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = detail::rational_from_json(j[i][c], fi + "[" + std::to_string(c) + "]");
    }
    return m;
}

inline Vector vector_from_text(const std::string& text) {
    Vector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    return v;
}

struct AlgebraFile {
    Algebra algebra;
    std::optional<Matrix> gamma;

    MetrisedAlgebra metrised() const {
        if (!gamma) throw ParseError("algebra file has no \"gamma\" field");
        return MetrisedAlgebra(algebra, *gamma);
    }
};

inline AlgebraFile algebra_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
        throw ParseError("missing or invalid non-negative integer" + detail::where("dim"));
    const auto n = static_cast<std::size_t>(j["dim"].get<long long>());
    std::vector<StructureConstant> ks;
    if (j.contains("k")) {
        if (!j["k"].is_array()) throw ParseError("expected an array" + detail::where("k"));
        for (std::size_t t = 0; t < j["k"].size(); ++t) {
            const std::string f = "k[" + std::to_string(t) + "]";
            const json& e = j["k"][t];
            if (!e.is_array() || e.size() != 4) throw ParseError("expected [alpha, beta, delta, \"p/q\"]" + detail::where(f));
            const std::size_t a = detail::index_from_json(e[0], n, f + "[0]");
            const std::size_t b = detail::index_from_json(e[1], n, f + "[1]");
            const std::size_t d = detail::index_from_json(e[2], n, f + "[2]");
            if (a > b) throw ParseError("alpha > beta is not allowed; list the pair with alpha <= beta" + detail::where(f));
            for (const auto& prev : ks)
                if (prev.alpha == a && prev.beta == b && prev.delta == d)
                    throw ParseError("duplicate structure constant" + detail::where(f));
            ks.push_back({a, b, d, detail::rational_from_json(e[3], f + "[3]")});
        }
    }
    AlgebraFile out{Algebra(n, ks), std::nullopt};
    if (j.contains("gamma")) {
        Matrix g = matrix_from_json(j["gamma"], "gamma");
        if (g.rows() != n || g.cols() != n) throw ParseError("gamma must be " + std::to_string(n) + "x" + std::to_string(n) + detail::where("gamma"));
        out.gamma = std::move(g);
    }
    return out;
}

/// Parses JSON text, translating syntax errors into "line L, column C" diagnostics.
inline json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(source + ": line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline AlgebraFile load_algebra_file(const std::string& path) {
    const json j = parse_json_text(read_file(path), path);
    try {
        return algebra_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.contains("nvars") || !j["nvars"].is_number_integer()) throw ParseError("missing integer" + detail::where("nvars"));
    const auto n = j["nvars"].get<std::size_t>();
    Polynomial p(n);
    if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("missing array" + detail::where("terms"));
    for (std::size_t t = 0; t < j["terms"].size(); ++t) {
        const std::string f = "terms[" + std::to_string(t) + "]";
        const json& e = j["terms"][t];
        if (!e.contains("exponents") || !e["exponents"].is_array() || e["exponents"].size() != n)
            throw ParseError("exponent vector must have nvars entries" + detail::where(f));
        Exponent ex;
        for (const auto& x : e["exponents"]) {
            if (!x.is_number_unsigned()) throw ParseError("exponents must be non-negative integers" + detail::where(f));
            ex.push_back(x.get<unsigned>());
        }
        p.add_term(ex, detail::rational_from_json(e.value("coeff", json()), f + ".coeff"));
    }
    return p;
}

/// Surface file: {"polynomial": text, "nvars": n} or {"nvars": n, "terms": [...]}, plus optional
/// "mode" (default hatC) and "algebra".
inline Surface surface_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("surface file must be a JSON object");
    std::size_t nvars = 0;
    if (j.contains("nvars")) {
        if (!j["nvars"].is_number_unsigned()) throw ParseError("expected a non-negative integer" + detail::where("nvars"));
        nvars = j["nvars"].get<std::size_t>();
    }
    Polynomial f;
    if (j.contains("polynomial")) {
        if (!j["polynomial"].is_string()) throw ParseError("expected a string" + detail::where("polynomial"));
        f = parse_polynomial(j["polynomial"].get<std::string>(), nvars);
    } else if (j.contains("terms")) {
        f = polynomial_from_json(j);
    } else {
        throw ParseError("surface file needs \"polynomial\" or \"terms\"");
    }
    const SurfaceMode mode = j.contains("mode") ? parse_mode(j["mode"].get<std::string>()) : SurfaceMode::hatC;
    std::optional<MetrisedAlgebra> src;
    if (j.contains("algebra")) src = algebra_from_json(j["algebra"]).metrised();
    return Surface(std::move(f), mode, std::move(src));
}

}  // namespace parcubic

#endif
