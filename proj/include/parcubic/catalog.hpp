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

#ifndef PARCUBIC_CATALOG_HPP
#define PARCUBIC_CATALOG_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "metrised_algebra.hpp"

namespace parcubic {

struct CatalogKey {
    std::string name;
    std::optional<Rational> alpha;
};

/// A catalog key together with the flags the entry is known to have.
struct CatalogEntry {
    CatalogKey key;
    std::size_t dim = 0;
    bool jordan = true;
    bool associative = false;
    bool nilpotent = true;
    std::optional<bool> irreducible;
    std::optional<std::size_t> derivation_dim;
    bool parametric = false;
    std::string description;
};

/// (t Q[t]) / (t^{n+1}) in the basis t, ..., t^n, paired by the coefficient of t^{n+1}.
inline MetrisedAlgebra cayley(std::size_t n) {
    if (n == 0) throw PreconditionError("cayley(n) needs n >= 1");
    std::vector<StructureConstant> ks;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a; a + b <= n; ++b) ks.push_back({a - 1, b - 1, a + b - 1, Rational(1)});
    return MetrisedAlgebra(Algebra(n, ks), Matrix::antidiagonal(n));
}

namespace detail {

/// Collects structure constants given with 1-based indices and alpha <= beta.
class ConstantList {
   public:
    ConstantList& set(std::size_t a, std::size_t b, std::size_t d, const Rational& v) {
        if (sgn(v) != 0) ks_.push_back({a - 1, b - 1, d - 1, v});
        return *this;
    }
    const std::vector<StructureConstant>& get() const { return ks_; }

   private:
    std::vector<StructureConstant> ks_;
};

inline MetrisedAlgebra algebras4_entry(const std::array<Rational, 5>& p) {
    const auto& [a, b, c, d, e] = p;
    ConstantList k;
    k.set(3, 3, 2, a);
    k.set(3, 4, 2, b).set(3, 3, 1, b);
    k.set(4, 4, 2, c).set(3, 4, 1, c);
    k.set(4, 4, 1, d);
    k.set(2, 4, 1, e).set(4, 4, 3, e);
    return MetrisedAlgebra(Algebra(4, k.get()), Matrix::antidiagonal(4));
}

inline MetrisedAlgebra algebras5_entry(const std::array<Rational, 8>& p) {
    const auto& [a, b, c, d, e, f, g, h] = p;
    ConstantList k;
    k.set(5, 5, 4, a).set(2, 5, 1, a);
    k.set(4, 4, 3, b).set(3, 4, 2, b);
    k.set(4, 5, 3, c).set(3, 5, 2, c).set(3, 4, 1, c);
    k.set(5, 5, 3, d).set(3, 5, 1, d);
    k.set(4, 4, 2, e);
    k.set(4, 4, 1, f).set(4, 5, 2, f);
    k.set(5, 5, 2, g).set(4, 5, 1, g);
    k.set(5, 5, 1, h);
    return MetrisedAlgebra(Algebra(5, k.get()), Matrix::antidiagonal(5));
}

inline Matrix class3_gamma() { return Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}; }

inline bool is_parametric(const std::string& name) { return name == "algebras5.3" || name == "algebras5.6"; }

}  // namespace detail

/// Entry of the built-in table. Keys: cayley.N, algebras4.1-3, algebras5.1-7 (3 and 6 take alpha > 0),
/// class3.1, class3.2, bivariate.
inline MetrisedAlgebra builtin(const CatalogKey& key) {
    const std::string& name = key.name;
    if (name.rfind("cayley.", 0) == 0) {
        const std::string digits = name.substr(7);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3)
            throw PreconditionError("unknown catalog key '" + name + "'");
        return cayley(std::stoul(digits));
    }
    if (detail::is_parametric(name)) {
        if (!key.alpha) throw PreconditionError("catalog entry '" + name + "' needs the parameter alpha");
        if (sgn(*key.alpha) <= 0) throw PreconditionError("alpha must be positive");
    }
    const Rational al = key.alpha.value_or(Rational(0));
    const Rational third(1, 3);
    if (name == "algebras4.1") return detail::algebras4_entry({0, third, third, 0, 0});
    if (name == "algebras4.2") return detail::algebras4_entry({0, 0, third, 0, 0});
    if (name == "algebras4.3") return detail::algebras4_entry({0, 1, 0, 0, 1});
    if (name == "algebras5.1") return detail::algebras5_entry({0, 1, 0, 0, 0, 0, 1, 0});
    if (name == "algebras5.2") return detail::algebras5_entry({0, 1, 0, 1, 0, 0, 0, 0});
    if (name == "algebras5.3") return detail::algebras5_entry({0, 1, 0, 1, al, 0, 0, 0});
    if (name == "algebras5.4") return detail::algebras5_entry({0, 0, 1, 0, 0, 0, 0, 0});
    if (name == "algebras5.5") return detail::algebras5_entry({0, 0, 1, 0, 1, 0, 0, 0});
    if (name == "algebras5.6") return detail::algebras5_entry({0, 0, 1, 0, al, 0, 0, al});
    if (name == "algebras5.7") return detail::algebras5_entry({1, 0, 1, 0, 1, 0, 0, 0});
    if (name == "class3.1") {
        return MetrisedAlgebra(Algebra(3, detail::ConstantList().set(2, 2, 1, 1).get()), detail::class3_gamma());
    }
    if (name == "class3.2") {
        return MetrisedAlgebra(Algebra(3, detail::ConstantList().set(2, 2, 3, 1).set(2, 3, 1, 1).get()),
                               detail::class3_gamma());
    }
    if (name == "bivariate") {
        // basis ts, t^2, t, t^2 s of (t Q[t,s]) / (t^3, s^2)
        const auto ks = detail::ConstantList().set(3, 3, 2, 1).set(1, 3, 4, 1).get();
        Matrix g(4, 4);
        g(0, 1) = g(1, 0) = 1;
        g(2, 3) = g(3, 2) = 1;
        return MetrisedAlgebra(Algebra(4, ks), g);
    }
    throw PreconditionError("unknown catalog key '" + name + "'");
}

inline MetrisedAlgebra builtin(const std::string& name) { return builtin(CatalogKey{name, std::nullopt}); }

/// Every concrete entry with its expected flags. The Cayley family is listed for n = 1..6 and is
/// available for any n through builtin.
inline std::vector<CatalogEntry> list_catalog() {
    std::vector<CatalogEntry> out;
    for (std::size_t n = 1; n <= 6; ++n) {
        CatalogEntry e;
        e.key = {"cayley." + std::to_string(n), std::nullopt};
        e.dim = n;
        e.associative = true;
        e.irreducible = true;
        e.parametric = true;
        e.description = "cayley.n family: (tQ[t])/(t^{n+1})";
        out.push_back(e);
    }
    for (int i = 1; i <= 3; ++i) {
        CatalogEntry e;
        e.key = {"algebras4." + std::to_string(i), std::nullopt};
        e.dim = 4;
        e.associative = true;
        e.irreducible = true;
        e.description = "irreducible 4-dimensional algebra";
        out.push_back(e);
    }
    const std::array<std::size_t, 7> aut{2, 2, 1, 2, 1, 1, 0};
    for (int i = 1; i <= 7; ++i) {
        const std::string name = "algebras5." + std::to_string(i);
        for (int alpha : {1, 2}) {
            if (alpha == 2 && !detail::is_parametric(name)) continue;
            CatalogEntry e;
            e.key = {name, detail::is_parametric(name) ? std::optional<Rational>(alpha) : std::nullopt};
            e.dim = 5;
            e.associative = i == 1 || i == 7;
            e.irreducible = true;
            if (alpha == 1) e.derivation_dim = aut[static_cast<std::size_t>(i - 1)];
            e.description = "irreducible 5-dimensional algebra, signature (3,2)";
            out.push_back(e);
        }
    }
    {
        CatalogEntry e;
        e.key = {"class3.1", std::nullopt};
        e.dim = 3;
        e.associative = true;
        e.irreducible = false;
        e.description = "cayley.2 plus a 1-dimensional zero algebra";
        out.push_back(e);
        e.key = {"class3.2", std::nullopt};
        e.irreducible = true;
        e.description = "3-dimensional Cayley algebra in another basis";
        out.push_back(e);
        e.key = {"bivariate", std::nullopt};
        e.dim = 4;
        e.irreducible = true;
        e.description = "(tQ[t,s])/(t^3,s^2) with the t^3 s pairing";
        out.push_back(e);
    }
    return out;
}

}  // namespace parcubic

#endif
