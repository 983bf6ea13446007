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

#ifndef PARCUBIC_CLI_HPP
#define PARCUBIC_CLI_HPP

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "io.hpp"
#include "parcubic.hpp"

namespace parcubic::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2 };

namespace detail {

inline constexpr std::string_view catalog_prefix = "catalog:";

struct Options {
    bool json = false;
    std::optional<std::string> alpha;
};

inline bool is_catalog(const std::string& src) { return src.rfind(catalog_prefix, 0) == 0; }

inline CatalogKey catalog_key(const std::string& src, const Options& opt) {
    CatalogKey key{src.substr(catalog_prefix.size()), std::nullopt};
    if (opt.alpha)
        key.alpha = parse_rational(*opt.alpha);
    else if (key.name == "algebras5.3" || key.name == "algebras5.6")
        key.alpha = Rational(1);
    return key;
}

inline json load_json(const std::string& path) { return parse_json_text(read_file(path), path); }

inline bool looks_like_surface(const json& j) {
    return j.is_object() && (j.contains("polynomial") || j.contains("terms"));
}

inline AlgebraFile algebra_source(const std::string& src, const Options& opt) {
    if (is_catalog(src)) {
        const MetrisedAlgebra m = builtin(catalog_key(src, opt));
        return AlgebraFile{m.algebra(), m.gamma()};
    }
    const json j = load_json(src);
    if (looks_like_surface(j)) {
        if (!j.contains("algebra")) throw ParseError(src + ": surface file has no \"algebra\" field");
        try {
            return algebra_from_json(j["algebra"]);
        } catch (const ParseError& e) {
            throw ParseError(src + ": algebra: " + e.what());
        }
    }
    try {
        return algebra_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(src + ": " + e.what());
    }
}

inline MetrisedAlgebra metrised_source(const std::string& src, const Options& opt) {
    const AlgebraFile f = algebra_source(src, opt);
    if (!f.gamma) throw ParseError(src + ": algebra file has no \"gamma\" field");
    return f.metrised();
}

/// Surface files are read as they are; algebras are turned into surfaces of the given mode.
inline Surface surface_source(const std::string& src, const Options& opt, SurfaceMode mode,
                              std::optional<unsigned> max_degree = std::nullopt) {
    if (!is_catalog(src)) {
        const json j = load_json(src);
        if (looks_like_surface(j)) {
            try {
                return surface_from_json(j);
            } catch (const ParseError& e) {
                throw ParseError(src + ": " + e.what());
            }
        }
    }
    return generate_surface(metrised_source(src, opt), mode, max_degree);
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string signature_text(const Signature& s) {
    return "(" + std::to_string(s.positives) + "," + std::to_string(s.negatives) + ")";
}

inline std::string vector_text(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_rational(v[i]);
    return s + ")";
}

inline std::string indices_text(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
    return s + "}";
}

inline void print_matrix(std::ostream& out, const std::string& name, const Matrix& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells.push_back(format_rational(m(i, j)));
            width = std::max(width, cells.back().size());
        }
    out << name << ":\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << std::setw(static_cast<int>(width)) << cells[i * m.cols() + j];
        out << "]\n";
    }
}

inline void print_algebra(std::ostream& out, const Algebra& a, const std::optional<Matrix>& gamma) {
    out << "dimension " << a.dim() << "\n";
    const auto ks = a.constants();
    out << "structure constants (" << ks.size() << "):\n";
    for (const auto& c : ks)
        out << "  K^" << c.delta + 1 << "_{" << c.alpha + 1 << "," << c.beta + 1 << "} = " << format_rational(c.value) << "\n";
    if (gamma) print_matrix(out, "gamma", *gamma);
}

inline void print_split(std::ostream& out, const SplitReport& r) {
    if (!r.found) {
        out << "split          none found\n";
        return;
    }
    out << "split          " << r.criterion << ", blocks " << indices_text(r.block_a) << " + " << indices_text(r.block_b)
        << " of the basis below\n";
    if (r.witness) out << "witness        " << vector_text(*r.witness) << "\n";
    print_matrix(out, "split basis (columns)", r.basis);
}

inline void print_partition(std::ostream& out, const Partition& p) {
    out << "partition      ";
    for (std::size_t b = 0; b < p.blocks.size(); ++b) out << (b ? " " : "") << indices_text(p.blocks[b]);
    out << "\n";
}

inline json with_source(json j, const std::string& src) {
    json out;
    out["source"] = src;
    for (auto& [k, v] : j.items()) out[k] = v;
    return out;
}

}  // namespace detail

/// Parses argv and executes one verb; output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using namespace detail;
    CLI::App app{"Exact computations with metrised Jordan algebras and parallel cubic hypersurfaces", "parcubic"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--param-alpha", opt.alpha, "alpha for parametric catalog entries (p/q, default 1)");

    std::string src;
    std::vector<std::string> sources;
    std::string mode_text = "hatC", pde_text = "hatC", at_text, catalog_action, catalog_key_text;
    std::optional<unsigned> max_degree;
    std::size_t points = 25;
    std::uint64_t seed = 42;
    bool symbolic = false;

    auto* check = app.add_subcommand("check", "validate the metrised Jordan axioms");
    check->add_option("source", src, "algebra FILE or catalog:KEY")->required();
    auto* canon = app.add_subcommand("canonicalize", "bring to semi-canonical form");
    canon->add_option("source", src, "algebra FILE or catalog:KEY")->required();
    auto* surface = app.add_subcommand("surface", "defining polynomial of the associated hypersurface");
    surface->add_option("source", src, "algebra FILE or catalog:KEY")->required();
    surface->add_option("--mode", mode_text, "hatC, nablaK or nablaC")->check(CLI::IsMember({"hatC", "nablaK", "nablaC"}));
    surface->add_option("--max-degree", max_degree, "series truncation for non-nilpotent input");
    auto* verify = app.add_subcommand("verify", "check the PDE at seeded random points or symbolically");
    verify->add_option("source", src, "surface FILE, algebra FILE or catalog:KEY")->required();
    verify->add_option("--pde", pde_text, "hatC or nablaK")->check(CLI::IsMember({"hatC", "nablaK"}));
    verify->add_option("--points", points, "number of sample points")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed");
    verify->add_flag("--symbolic", symbolic, "polynomial identity after clearing det F''");
    auto* hyper = app.add_subcommand("hypersphere", "is det F'' a constant +-1");
    hyper->add_option("source", src, "surface FILE, algebra FILE or catalog:KEY")->required();
    auto* inv = app.add_subcommand("invariants", "signature, derivation dimension, split scan, bounds");
    inv->add_option("source", src, "algebra FILE or catalog:KEY")->required();
    auto* sum = app.add_subcommand("sum", "orthogonal direct sum");
    sum->add_option("sources", sources, "algebra FILEs or catalog:KEYs")->required()->expected(1, -1);
    auto* qi = app.add_subcommand("quasi-inverse", "(-x)^(-1) and its certificate");
    qi->add_option("source", src, "algebra FILE or catalog:KEY")->required();
    qi->add_option("--at", at_text, "element as p/q,p/q,...")->required();
    auto* cat = app.add_subcommand("catalog", "built-in algebras");
    cat->add_option("action", catalog_action, "list or export")->required()->check(CLI::IsMember({"list", "export"}));
    cat->add_option("key", catalog_key_text, "catalog key for export");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::usage;
    }

    try {
        if (check->parsed()) {
            const MetrisedAlgebra m = metrised_source(src, opt);
            const ValidationReport r = validate(m);
            if (opt.json) {
                json j = with_source(to_json(r), src);
                j["dim"] = m.dim();
                out << j.dump(2) << "\n";
            } else {
                out << "source         " << src << "\n"
                    << "dimension      " << m.dim() << "\n"
                    << "jordan         " << yes_no(r.jordan) << "\n"
                    << "associative    " << yes_no(r.associative) << "\n"
                    << "trace form     " << yes_no(r.trace_form) << "\n"
                    << "nilpotent      " << yes_no(r.nilpotent) << "\n"
                    << "signature      " << signature_text(r.signature) << ", flipped " << signature_text(r.flipped_signature)
                    << "\n"
                    << "det gamma      " << format_rational(r.det_gamma) << "\n";
                print_split(out, r.splits);
                out << (r.ok() ? "result         metrised Jordan algebra\n" : "result         not a metrised Jordan algebra\n");
            }
            return r.ok() ? ExitCode::ok : ExitCode::failed;
        }
        if (canon->parsed()) {
            const CanonicalResult r = semi_canonicalize(metrised_source(src, opt));
            if (opt.json) {
                out << with_source(to_json(r), src).dump(2) << "\n";
            } else {
                out << "source         " << src << "\n";
                print_partition(out, r.partition);
                out << "2-blocks       " << r.partition.two_blocks() << "\n";
                if (r.non_unit_diagonal) out << "note           some diagonal gamma entries are not +-1 over Q\n";
                print_matrix(out, "basis change (columns)", r.basis_change);
                print_algebra(out, r.result.algebra(), r.result.gamma());
            }
            return ExitCode::ok;
        }
        if (surface->parsed()) {
            const Surface s = generate_surface(metrised_source(src, opt), parse_mode(mode_text), max_degree);
            if (opt.json)
                out << with_source(to_json(s), src).dump(2) << "\n";
            else
                out << to_string(s.F()) << "\n";
            return ExitCode::ok;
        }
        if (verify->parsed()) {
            const PdeKind pde = parse_pde(pde_text);
            const Surface s = surface_source(src, opt, pde == PdeKind::hatC ? SurfaceMode::hatC : SurfaceMode::nablaK);
            VerificationReport r;
            if (symbolic) {
                r.pde = pde;
                r.seed = seed;
                r.symbolic = true;
                r.symbolic_identity = verify_pde_symbolic(s, pde);
            } else {
                r = verify_pde(s, pde, points, seed);
            }
            if (opt.json) {
                out << with_source(to_json(r), src).dump(2) << "\n";
            } else {
                out << "source         " << src << "\n"
                    << "polynomial     " << to_string(s.F()) << "\n"
                    << "pde            " << to_string(pde) << "\n";
                if (symbolic) {
                    out << "mode           symbolic\n";
                } else {
                    out << "seed           " << seed << "\n"
                        << "skipped        " << r.skipped << " singular sample(s)\n"
                        << "point  max|residual|  coordinates\n";
                    for (const auto& p : r.points)
                        out << std::setw(5) << p.index + 1 << "  " << std::setw(13) << format_rational(p.max_abs_residual) << "  "
                            << vector_text(p.point) << "\n";
                }
                out << "result         " << (r.passed() ? "verified" : "FAILED") << "\n";
            }
            return r.passed() ? ExitCode::ok : ExitCode::failed;
        }
        if (hyper->parsed()) {
            const Surface s = surface_source(src, opt, SurfaceMode::hatC);
            const HypersphereCheck r = is_improper_hypersphere(s);
            if (opt.json) {
                json j;
                j["source"] = src;
                j["polynomial"] = to_string(s.F());
                j["det"] = to_string(r.det);
                j["improper_hypersphere"] = r.improper_hypersphere;
                out << j.dump(2) << "\n";
            } else {
                out << "polynomial     " << to_string(s.F()) << "\n"
                    << "det F''        " << to_string(r.det) << "\n"
                    << "result         " << (r.improper_hypersphere ? "improper affine hypersphere" : "not an improper affine hypersphere")
                    << "\n";
            }
            return r.improper_hypersphere ? ExitCode::ok : ExitCode::failed;
        }
        if (inv->parsed()) {
            const MetrisedAlgebra m = metrised_source(src, opt);
            const Signature sig = sym_signature(m.gamma());
            const std::size_t der = skew_derivation_dim(m);
            const SplitReport split = orthogonal_split_scan(m);
            std::optional<BoundReport> bounds;
            if (m.dim() >= 2 && is_nilpotent(m.algebra()) && is_jordan(m.algebra()) && is_trace_form(m))
                bounds = dimension_bound_check(m);
            if (opt.json) {
                json j;
                j["source"] = src;
                j["dim"] = m.dim();
                j["signature"] = to_json(sig);
                j["derivation_dim"] = der;
                j["splits"] = to_json(split);
                j["bounds"] = bounds ? to_json(*bounds) : json(nullptr);
                out << j.dump(2) << "\n";
            } else {
                out << "source         " << src << "\n"
                    << "dimension      " << m.dim() << "\n"
                    << "signature      " << signature_text(sig) << "\n"
                    << "derivations    " << der << " (gamma-skew)\n";
                print_split(out, split);
                if (bounds) {
                    out << "k              " << bounds->k << "\n"
                        << "n <= k(k+5)/2  " << yes_no(bounds->dimension_bound) << " (" << bounds->n << " <= " << bounds->bound << ")\n"
                        << "2-blocks m     " << bounds->two_blocks << ", threshold " << yes_no(bounds->two_block_threshold) << "\n";
                } else {
                    out << "bounds         n/a (needs a nilpotent metrised Jordan algebra of dimension >= 2)\n";
                }
            }
            return ExitCode::ok;
        }
        if (sum->parsed()) {
            std::vector<MetrisedAlgebra> parts;
            for (const auto& s : sources) parts.push_back(metrised_source(s, opt));
            const MetrisedAlgebra m = direct_sum(parts);
            if (opt.json)
                out << to_json(m).dump(2) << "\n";
            else
                print_algebra(out, m.algebra(), m.gamma());
            return ExitCode::ok;
        }
        if (qi->parsed()) {
            const AlgebraFile f = algebra_source(src, opt);
            const Vector x = vector_from_text(at_text);
            if (x.size() != f.algebra.dim())
                throw ParseError("--at has " + std::to_string(x.size()) + " entries, algebra dimension is " + std::to_string(f.algebra.dim()));
            const auto cert = quasi_regular_certificate(f.algebra, x);
            std::optional<Vector> y;
            if (sgn(cert.det) != 0) y = quasi_inverse_neg(f.algebra, x);
            if (opt.json) {
                json j;
                j["source"] = src;
                j["x"] = to_json(x);
                j["det"] = format_rational(cert.det);
                j["quasi_regular"] = y.has_value();
                j["quasi_inverse"] = y ? to_json(*y) : json(nullptr);
                out << j.dump(2) << "\n";
            } else {
                out << "x              " << vector_text(x) << "\n"
                    << "det(I+2L+U)    " << format_rational(cert.det) << "\n";
                if (y)
                    out << "(-x)^(-1)      " << vector_text(*y) << "\n";
                else
                    out << "(-x)^(-1)      undefined: x is not quasi-regular\n";
            }
            return y ? ExitCode::ok : ExitCode::failed;
        }
        if (cat->parsed()) {
            if (catalog_action == "list") {
                const auto entries = list_catalog();
                if (opt.json) {
                    json a = json::array();
                    for (const auto& e : entries) {
                        json j;
                        j["key"] = e.key.name;
                        j["alpha"] = e.key.alpha ? json(format_rational(*e.key.alpha)) : json(nullptr);
                        j["dim"] = e.dim;
                        j["jordan"] = e.jordan;
                        j["associative"] = e.associative;
                        j["nilpotent"] = e.nilpotent;
                        j["irreducible"] = e.irreducible ? json(*e.irreducible) : json(nullptr);
                        j["derivation_dim"] = e.derivation_dim ? json(*e.derivation_dim) : json(nullptr);
                        j["parametric"] = e.parametric;
                        j["description"] = e.description;
                        a.push_back(j);
                    }
                    out << a.dump(2) << "\n";
                } else {
                    out << std::left << std::setw(14) << "key" << std::setw(7) << "alpha" << std::setw(5) << "dim" << std::setw(7) << "assoc"
                        << std::setw(7) << "irred" << std::setw(6) << "der" << "description\n";
                    for (const auto& e : entries) {
                        out << std::setw(14) << e.key.name << std::setw(7) << (e.key.alpha ? format_rational(*e.key.alpha) : "-")
                            << std::setw(5) << e.dim << std::setw(7) << yes_no(e.associative) << std::setw(7)
                            << (e.irreducible ? yes_no(*e.irreducible) : "?") << std::setw(6)
                            << (e.derivation_dim ? std::to_string(*e.derivation_dim) : "-") << e.description << "\n";
                    }
                    out << std::right;
                }
                return ExitCode::ok;
            }
            if (catalog_key_text.empty()) throw ParseError("catalog export needs a KEY");
            const std::string key = is_catalog(catalog_key_text) ? catalog_key_text : std::string(catalog_prefix) + catalog_key_text;
            out << to_json(builtin(catalog_key(key, opt))).dump(2) << "\n";
            return ExitCode::ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::usage;
    }
    return ExitCode::usage;
}

}  // namespace parcubic::cli

#endif
