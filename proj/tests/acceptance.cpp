// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace parcubic;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

Polynomial hat_c(const MetrisedAlgebra& m) { return generate_surface(m, SurfaceMode::hatC).F(); }

std::vector<CatalogKey> algebras5_keys() {
    std::vector<CatalogKey> keys;
    for (int i = 1; i <= 7; ++i) {
        const std::string name = "algebras5." + std::to_string(i);
        if (i == 3 || i == 6) {
            keys.push_back({name, Rational(1)});
            keys.push_back({name, Rational(2)});
        } else {
            keys.push_back({name, std::nullopt});
        }
    }
    return keys;
}

std::string label(const CatalogKey& k) {
    return k.alpha ? k.name + "[alpha=" + format_rational(*k.alpha) + "]" : k.name;
}

std::vector<CatalogKey> nilpotent_catalog() {
    std::vector<CatalogKey> keys;
    for (const auto& e : list_catalog())
        if (e.nilpotent) keys.push_back(e.key);
    return keys;
}

Outcome classification_five() {
    Outcome o;
    for (const auto& key : algebras5_keys()) {
        const auto m = builtin(key);
        const auto r = validate(m);
        o.require(r.jordan && r.trace_form && r.nilpotent, label(key) + ": validate flags");
        o.require(r.det_gamma == 1, label(key) + ": det gamma");
        o.require(r.signature == Signature{3, 2, 0}, label(key) + ": signature");
        const int line = key.name.back() - '0';
        const Polynomial expected = parse_polynomial(oracle::class5(line, key.alpha.value_or(Rational(1))), 5);
        o.require(hat_c(m) == expected, label(key) + ": surface polynomial");
    }
    return o;
}

Outcome derivation_table() {
    Outcome o;
    const std::vector<std::size_t> expected{2, 2, 1, 2, 1, 1, 0};
    std::string got;
    for (int i = 1; i <= 7; ++i) {
        const std::string name = "algebras5." + std::to_string(i);
        const std::optional<Rational> alpha = (i == 3 || i == 6) ? std::optional<Rational>(1) : std::nullopt;
        const std::size_t d = skew_derivation_dim(builtin(CatalogKey{name, alpha}));
        got += (i > 1 ? "," : "") + std::to_string(d);
        o.require(d == expected[static_cast<std::size_t>(i - 1)], name + ": derivation dimension");
    }
    if (o.ok) o.detail = "[" + got + "]";
    return o;
}

Outcome cayley_cross_check() {
    Outcome o;
    for (unsigned n = 2; n <= 6; ++n)
        o.require(hat_c(cayley(n)) == oracle::cayley_hatC(n), "hatC n=" + std::to_string(n));
    for (unsigned n = 2; n <= 5; ++n)
        o.require(generate_surface(cayley(n), SurfaceMode::nablaK).F() == oracle::cayley_nablaK(n),
                  "nablaK n=" + std::to_string(n));
    return o;
}

Outcome hypersphere_identity() {
    Outcome o;
    std::vector<CatalogKey> keys;
    for (int n = 1; n <= 6; ++n) keys.push_back({"cayley." + std::to_string(n), std::nullopt});
    for (int i = 1; i <= 3; ++i) keys.push_back({"algebras4." + std::to_string(i), std::nullopt});
    for (const auto& k : algebras5_keys()) keys.push_back(k);
    for (const char* k : {"bivariate", "class3.1", "class3.2"}) keys.push_back({k, std::nullopt});
    for (const auto& key : keys) {
        const auto r = is_improper_hypersphere(generate_surface(builtin(key), SurfaceMode::hatC));
        o.require(r.improper_hypersphere, label(key) + ": det F'' = " + to_string(r.det));
    }
    return o;
}

Outcome pde_verification() {
    Outcome o;
    constexpr std::size_t points = 25;
    constexpr std::uint64_t seed = 42;
    for (const auto& e : list_catalog()) {
        const auto m = builtin(e.key);
        o.require(verify_pde(generate_surface(m, SurfaceMode::hatC), PdeKind::hatC, points, seed).passed(),
                  label(e.key) + ": hatC residual");
        if (e.associative)
            o.require(verify_pde(generate_surface(m, SurfaceMode::nablaK), PdeKind::nablaK, points, seed).passed(),
                      label(e.key) + ": nablaK residual");
    }
    o.require(!pde_residual_nablaK(generate_surface(cayley(3), SurfaceMode::hatC),
                                   Vector{Rational(1), Rational(1), Rational(1)})
                   .is_zero(),
              "cayley.3 hatC surface satisfies the nablaK equation");
    return o;
}

Outcome round_trip() {
    Outcome o;
    for (const auto& e : list_catalog()) {
        const auto m = builtin(e.key);
        o.require(algebra_at_point(hat_c(m), Vector(m.dim(), Rational(0))) == m, label(e.key));
    }
    return o;
}

Outcome quasi_inverse_law() {
    Outcome o;
    RationalSampler s(7);
    for (const auto& key : nilpotent_catalog()) {
        const Algebra a = builtin(key).algebra();
        for (int i = 0; i < 25; ++i) {
            const Vector x = s.vector(a.dim());
            const Vector y = quasi_inverse_neg(a, x);
            Vector diff = x;
            for (std::size_t t = 0; t < diff.size(); ++t) diff[t] -= y[t];
            o.require(multiply(a, x, y) == diff, label(key) + ": x.y = x - y");
            o.require(y == oracle::quasi_inverse_series(a, x), label(key) + ": finite series");
        }
    }
    return o;
}

Outcome canonicalization() {
    Outcome o;
    std::vector<CatalogKey> keys;
    for (int i = 1; i <= 3; ++i) keys.push_back({"algebras4." + std::to_string(i), std::nullopt});
    for (const auto& k : algebras5_keys()) keys.push_back(k);
    for (const auto& key : keys) {
        const auto base = builtin(key);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            RationalSampler s(seed);
            const auto scrambled = change_basis(base, s.invertible_matrix(base.dim()));
            const auto r = semi_canonicalize(scrambled);
            const std::string where = label(key) + " seed " + std::to_string(seed);
            o.require(verify_semi_canonical(r.result, r.partition), where + ": verify_semi_canonical");
            const auto before = validate(scrambled), after = validate(r.result);
            o.require(before.jordan == after.jordan && before.trace_form == after.trace_form &&
                          before.nilpotent == after.nilpotent,
                      where + ": validate flags");
            o.require(before.signature == after.signature && after.signature == sym_signature(base.gamma()),
                      where + ": signature");
        }
    }
    return o;
}

Outcome reducibility() {
    Outcome o;
    o.require(orthogonal_split_scan(builtin("class3.1")).found, "class3.1 split");
    o.require(orthogonal_split_scan(direct_sum({cayley(2), cayley(2)})).found, "C2+C2 split");
    o.require(!orthogonal_split_scan(builtin("algebras5.1")).found, "algebras5.1 reported reducible");
    o.require(!orthogonal_split_scan(builtin("algebras5.7")).found, "algebras5.7 reported reducible");
    for (const auto& key : algebras5_keys()) {
        const auto b = dimension_bound_check(builtin(key));
        o.require(b.n == 5 && b.k == 2 && b.dimension_bound, label(key) + ": n <= k(k+5)/2");
    }
    return o;
}

Outcome zeta_symmetry() {
    Outcome o;
    RationalSampler s(11);
    for (const auto& e : list_catalog()) {
        const auto m = builtin(e.key);
        int taken = 0;
        while (taken < 25) {
            const Vector x = s.vector(m.dim());
            if (sgn(quasi_regular_certificate(m.algebra(), x).det) == 0) continue;
            o.require(dzeta_matrix_at(m, x).is_symmetric(), label(e.key) + ": dzeta symmetric");
            ++taken;
        }
    }
    const PolyMatrix h = hessian(hat_c(cayley(2)));
    for (int i = 0; i < 25; ++i) {
        const Vector x = s.vector(2);
        o.require(dzeta_matrix_at(cayley(2), x) == h.evaluate(x), "C2: dzeta equals surface Hessian");
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "classification n=5", 2.0, classification_five},
        {2, "derivation-dimension table", 1.0, derivation_table},
        {3, "Cayley cross-check", 2.0, cayley_cross_check},
        {4, "improper-hypersphere identity", 5.0, hypersphere_identity},
        {5, "PDE verification", 10.0, pde_verification},
        {6, "round trip", 10.0, round_trip},
        {7, "quasi-inverse law", 10.0, quasi_inverse_law},
        {8, "canonicalization robustness", 30.0, canonicalization},
        {9, "reducibility criteria", 10.0, reducibility},
        {10, "zeta-form symmetry", 10.0, zeta_symmetry},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.budget_seconds) {
            o.ok = false;
            o.detail = "over time budget";
        }
        if (!o.ok) ++failed;
        std::printf("%s criterion %d: %s (%.3f s, budget %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.budget_seconds, o.detail.empty() ? "" : " ", o.detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
