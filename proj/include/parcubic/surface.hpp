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

#ifndef PARCUBIC_SURFACE_HPP
#define PARCUBIC_SURFACE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "metrised.hpp"
#include "metrised_algebra.hpp"
#include "polynomial.hpp"

namespace parcubic {

/// hatC: parallel cubic form; nablaK: parallel difference tensor; nablaC: parallel cubic form w.r.t. the induced connection.
enum class SurfaceMode { hatC, nablaK, nablaC };

inline std::string to_string(SurfaceMode m) {
    switch (m) {
        case SurfaceMode::hatC: return "hatC";
        case SurfaceMode::nablaK: return "nablaK";
        case SurfaceMode::nablaC: return "nablaC";
    }
    return "?";
}

inline SurfaceMode parse_mode(std::string_view s) {
    if (s == "hatC") return SurfaceMode::hatC;
    if (s == "nablaK") return SurfaceMode::nablaK;
    if (s == "nablaC") return SurfaceMode::nablaC;
    throw ParseError("unknown surface mode '" + std::string(s) + "' (expected hatC, nablaK or nablaC)");
}

/// Graph of F over a neighbourhood of the origin, with F(0) = 0 and F'(0) = 0.
class Surface {
   public:
    Surface(Polynomial f, SurfaceMode mode, std::optional<MetrisedAlgebra> source = std::nullopt)
        : f_(std::move(f)), mode_(mode), source_(std::move(source)) {
        for (const auto& [e, c] : f_.terms())
            if (total_degree(e) < 2) throw PreconditionError("surface polynomial must have no constant or linear terms");
    }

    const Polynomial& F() const noexcept { return f_; }
    SurfaceMode mode() const noexcept { return mode_; }
    const std::optional<MetrisedAlgebra>& source() const noexcept { return source_; }
    std::size_t dim() const noexcept { return f_.nvars(); }

   private:
    Polynomial f_;
    SurfaceMode mode_;
    std::optional<MetrisedAlgebra> source_;
};

/// Exact defining function of the surface attached to m. For nilpotent algebras the series ends by
/// itself and max_degree is ignored; otherwise terms up to total degree max_degree are kept.
inline Surface generate_surface(const MetrisedAlgebra& m, SurfaceMode mode,
                                std::optional<unsigned> max_degree = std::nullopt) {
    const std::size_t n = m.dim();
    const Algebra& a = m.algebra();
    if (!is_trace_form(m)) throw PreconditionError("trace_form: gamma(u.v,w) = gamma(u,v.w) fails");
    if (mode == SurfaceMode::hatC && !is_jordan(a)) throw PreconditionError("jordan: Jordan identity fails");
    if (mode == SurfaceMode::nablaK && !is_associative(a)) throw PreconditionError("associative: algebra is not associative");

    const auto x = detail::symbolic_element(n, n, 0);
    auto gamma_x = [&](const std::vector<Polynomial>& y) {
        Polynomial s(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(m.gamma()(i, j)) != 0 && !y[j].is_zero()) s += m.gamma()(i, j) * (x[i] * y[j]);
        return s;
    };

    if (mode == SurfaceMode::nablaC) {
        Polynomial f = Rational(1, 2) * gamma_x(x) - Rational(1, 3) * gamma_x(multiply(a, x, x));
        return Surface(std::move(f), mode, m);
    }

    const bool nilpotent = is_nilpotent(a);
    if (!nilpotent && !max_degree) throw PreconditionError("max_degree is required for a non-nilpotent algebra");
    Polynomial f(n);
    std::vector<Polynomial> xp = x;  // x^{k-1}
    Rational factorial = 1;
    for (unsigned k = 2;; ++k) {
        if (!nilpotent && k > *max_degree) break;
        factorial *= k;
        Rational c;
        if (mode == SurfaceMode::hatC) {
            c = Rational(k % 2 == 0 ? 1 : -1, k);
        } else {
            Rational p2 = 1;
            for (unsigned i = 2; i < k; ++i) p2 *= -2;
            c = p2 / factorial;
        }
        f += c * gamma_x(xp);
        xp = multiply(a, x, xp);
        if (std::all_of(xp.begin(), xp.end(), [](const Polynomial& p) { return p.is_zero(); })) break;
    }
    return Surface(std::move(f), mode, m);
}

struct HypersphereCheck {
    bool improper_hypersphere = false;
    Polynomial det;
};

/// det F'' must be the constant +1 or -1.
inline HypersphereCheck is_improper_hypersphere(const Surface& s) {
    HypersphereCheck r{false, poly_det(hessian(s.F()))};
    if (r.det.is_constant()) {
        const Rational c = r.det.constant_term();
        r.improper_hypersphere = c == 1 || c == -1;
    }
    return r;
}

/// Dense n^4 tensor.
struct Tensor4 {
    std::size_t n = 0;
    std::vector<Rational> data;

    explicit Tensor4(std::size_t dim = 0) : n(dim), data(dim * dim * dim * dim, Rational(0)) {}
    Rational& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) { return data[((a * n + b) * n + c) * n + d]; }
    const Rational& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        return data[((a * n + b) * n + c) * n + d];
    }
    bool is_zero() const { return parcubic::is_zero(data); }
    Rational max_abs() const {
        Rational m = 0;
        for (const auto& v : data)
            if (abs(v) > m) m = abs(v);
        return m;
    }
};

/// Symbolic partial derivatives of F up to order four, keyed by sorted index tuples.
class DerivativeTable {
   public:
    explicit DerivativeTable(const Polynomial& f) : n_(f.nvars()) {
        std::vector<Polynomial> d1;
        for (std::size_t i = 0; i < n_; ++i) d1.push_back(differentiate(f, i));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) {
                Polynomial d2 = differentiate(d1[i], j);
                for (std::size_t k = j; k < n_; ++k) {
                    Polynomial d3 = differentiate(d2, k);
                    for (std::size_t l = k; l < n_; ++l) fourth_[{i, j, k, l}] = differentiate(d3, l);
                    third_[{i, j, k}] = std::move(d3);
                }
                second_[{i, j}] = std::move(d2);
            }
    }

    std::size_t dim() const noexcept { return n_; }

    const Polynomial& second(std::size_t a, std::size_t b) const {
        std::array<std::size_t, 2> k{a, b};
        std::sort(k.begin(), k.end());
        return second_.at(k);
    }
    const Polynomial& third(std::size_t a, std::size_t b, std::size_t c) const {
        std::array<std::size_t, 3> k{a, b, c};
        std::sort(k.begin(), k.end());
        return third_.at(k);
    }
    const Polynomial& fourth(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        std::array<std::size_t, 4> k{a, b, c, d};
        std::sort(k.begin(), k.end());
        return fourth_.at(k);
    }

    PolyMatrix hessian() const {
        PolyMatrix h(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) h(i, j) = second(i, j);
        return h;
    }

    /// Numeric values at a point: hessian, third and fourth derivative tensors (dense).
    struct Values {
        Matrix h;
        std::vector<Rational> t3;  // n^3
        Tensor4 t4;
    };

    Values at(std::span<const Rational> p) const {
        if (p.size() != n_) throw DimensionError("point has wrong length");
        Values v{Matrix(n_, n_), std::vector<Rational>(n_ * n_ * n_), Tensor4(n_)};
        for (const auto& [k, poly] : second_) v.h(k[0], k[1]) = v.h(k[1], k[0]) = evaluate(poly, p);
        for (const auto& [k, poly] : third_) {
            const Rational val = evaluate(poly, p);
            std::array<std::size_t, 3> idx = k;
            do v.t3[(idx[0] * n_ + idx[1]) * n_ + idx[2]] = val;
            while (std::next_permutation(idx.begin(), idx.end()));
        }
        for (const auto& [k, poly] : fourth_) {
            const Rational val = evaluate(poly, p);
            std::array<std::size_t, 4> idx = k;
            do v.t4(idx[0], idx[1], idx[2], idx[3]) = val;
            while (std::next_permutation(idx.begin(), idx.end()));
        }
        return v;
    }

   private:
    std::size_t n_;
    std::map<std::array<std::size_t, 2>, Polynomial> second_;
    std::map<std::array<std::size_t, 3>, Polynomial> third_;
    std::map<std::array<std::size_t, 4>, Polynomial> fourth_;
};

namespace detail {

/// a[(al*n+be)*n+s] = sum_rho F_{al be rho} F^{rho s}
inline std::vector<Rational> contract_inverse(std::size_t n, const std::vector<Rational>& t3, const Matrix& hinv) {
    std::vector<Rational> a(n * n * n, Rational(0));
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = 0; be < n; ++be)
            for (std::size_t r = 0; r < n; ++r) {
                const Rational& f = t3[(al * n + be) * n + r];
                if (sgn(f) == 0) continue;
                for (std::size_t s = 0; s < n; ++s) a[(al * n + be) * n + s] += f * hinv(r, s);
            }
    return a;
}

inline Matrix inverse_at(const Matrix& h) {
    if (sgn(mat_det(h)) == 0) throw PreconditionError("Hessian is singular at the point");
    return mat_inverse(h);
}

}  // namespace detail

/// LHS - RHS of F_{abcd} = 1/2 F^{rs}(F_{abr}F_{cds} + F_{acr}F_{bds} + F_{adr}F_{bcs}) at the point.
inline Tensor4 pde_residual_hatC(const DerivativeTable& table, std::span<const Rational> point) {
    const std::size_t n = table.dim();
    const auto v = table.at(point);
    const Matrix hinv = detail::inverse_at(v.h);
    const auto a = detail::contract_inverse(n, v.t3, hinv);
    auto t3 = [&](std::size_t x, std::size_t y, std::size_t z) -> const Rational& { return v.t3[(x * n + y) * n + z]; };
    auto av = [&](std::size_t x, std::size_t y, std::size_t s) -> const Rational& { return a[(x * n + y) * n + s]; };
    Tensor4 res(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k)
                for (std::size_t l = k; l < n; ++l) {
                    Rational rhs = 0;
                    for (std::size_t s = 0; s < n; ++s)
                        rhs += av(i, j, s) * t3(k, l, s) + av(i, k, s) * t3(j, l, s) + av(i, l, s) * t3(j, k, s);
                    const Rational r = v.t4(i, j, k, l) - rhs / 2;
                    std::array<std::size_t, 4> idx{i, j, k, l};
                    do res(idx[0], idx[1], idx[2], idx[3]) = r;
                    while (std::next_permutation(idx.begin(), idx.end()));
                }
    return res;
}

inline Tensor4 pde_residual_hatC(const Surface& s, std::span<const Rational> point) {
    return pde_residual_hatC(DerivativeTable(s.F()), point);
}

/// LHS - RHS of F_{abcd} = F_{abr} F^{rs} F_{cds} at the point.
inline Tensor4 pde_residual_nablaK(const DerivativeTable& table, std::span<const Rational> point) {
    const std::size_t n = table.dim();
    const auto v = table.at(point);
    const Matrix hinv = detail::inverse_at(v.h);
    const auto a = detail::contract_inverse(n, v.t3, hinv);
    Tensor4 res(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational rhs = 0;
                    for (std::size_t s = 0; s < n; ++s) rhs += a[(i * n + j) * n + s] * v.t3[(k * n + l) * n + s];
                    res(i, j, k, l) = v.t4(i, j, k, l) - rhs;
                }
    return res;
}

inline Tensor4 pde_residual_nablaK(const Surface& s, std::span<const Rational> point) {
    return pde_residual_nablaK(DerivativeTable(s.F()), point);
}

/// Which PDE to verify.
enum class PdeKind { hatC, nablaK };

inline PdeKind parse_pde(std::string_view s) {
    if (s == "hatC") return PdeKind::hatC;
    if (s == "nablaK") return PdeKind::nablaK;
    throw ParseError("unknown PDE '" + std::string(s) + "' (expected hatC or nablaK)");
}

inline std::string to_string(PdeKind k) { return k == PdeKind::hatC ? "hatC" : "nablaK"; }

/// Random rationals p/q with |p| <= 10 and 1 <= q <= 7 from a seeded 64-bit Mersenne twister.
class RationalSampler {
   public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        std::uniform_int_distribution<int> num(-10, 10);
        std::uniform_int_distribution<int> den(1, 7);
        const int p = num(rng_);
        const int q = den(rng_);
        Rational r(p, q);
        r.canonicalize();
        return r;
    }

    Vector vector(std::size_t n) {
        Vector v(n);
        for (auto& x : v) x = next();
        return v;
    }

    /// Invertible n x n matrix with small random entries.
    Matrix invertible_matrix(std::size_t n) {
        while (true) {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = next();
            if (sgn(mat_det(m)) != 0) return m;
        }
    }

   private:
    std::mt19937_64 rng_;
};

struct PointResidual {
    std::size_t index = 0;
    Vector point;
    Rational max_abs_residual;
};

struct VerificationReport {
    PdeKind pde = PdeKind::hatC;
    std::uint64_t seed = 0;
    bool symbolic = false;
    std::vector<PointResidual> points;
    std::size_t skipped = 0;  ///< samples rejected for a singular Hessian
    bool symbolic_identity = false;

    bool passed() const {
        if (symbolic) return symbolic_identity;
        return std::all_of(points.begin(), points.end(), [](const PointResidual& p) { return sgn(p.max_abs_residual) == 0; });
    }
};

/// Evaluates the residual at `count` seeded random points with non-singular Hessian.
inline VerificationReport verify_pde(const Surface& s, PdeKind pde, std::size_t count, std::uint64_t seed) {
    VerificationReport r;
    r.pde = pde;
    r.seed = seed;
    const DerivativeTable table(s.F());
    const PolyMatrix h = table.hessian();
    RationalSampler sampler(seed);
    const std::size_t max_attempts = 100 * count + 100;
    for (std::size_t attempt = 0; r.points.size() < count; ++attempt) {
        if (attempt >= max_attempts) throw PreconditionError("could not find enough points with non-singular Hessian");
        Vector p = sampler.vector(s.dim());
        if (sgn(mat_det(h.evaluate(p))) == 0) {
            ++r.skipped;
            continue;
        }
        const Tensor4 t = pde == PdeKind::hatC ? pde_residual_hatC(table, p) : pde_residual_nablaK(table, p);
        r.points.push_back({r.points.size(), std::move(p), t.max_abs()});
    }
    return r;
}

/// Multiplies the PDE through by det F'' and checks the resulting polynomial identity
/// det F_{abcd} = 1/2 adj^{rs}(...) (hatC) or det F_{abcd} = F_{abr} adj^{rs} F_{cds} (nablaK).
inline bool verify_pde_symbolic(const Surface& s, PdeKind pde) {
    const DerivativeTable table(s.F());
    const std::size_t n = table.dim();
    const PolyMatrix h = table.hessian();
    const Polynomial det = poly_det(h);
    if (det.is_zero()) throw PreconditionError("Hessian determinant vanishes identically");
    const PolyMatrix adj = poly_adjugate(h);
    // b[(al*n+be)*n+s] = sum_r F_{al be r} adj^{r s}
    std::vector<Polynomial> b(n * n * n, Polynomial(n));
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = al; be < n; ++be)
            for (std::size_t sidx = 0; sidx < n; ++sidx) {
                Polynomial acc(n);
                for (std::size_t r = 0; r < n; ++r) {
                    const Polynomial& f = table.third(al, be, r);
                    if (f.is_zero() || adj(r, sidx).is_zero()) continue;
                    acc += f * adj(r, sidx);
                }
                b[(al * n + be) * n + sidx] = acc;
                b[(be * n + al) * n + sidx] = std::move(acc);
            }
    auto bb = [&](std::size_t x, std::size_t y, std::size_t z) -> const Polynomial& { return b[(x * n + y) * n + z]; };
    auto term = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        Polynomial acc(n);
        for (std::size_t sidx = 0; sidx < n; ++sidx) {
            const Polynomial& f = table.third(k, l, sidx);
            if (f.is_zero() || bb(i, j, sidx).is_zero()) continue;
            acc += bb(i, j, sidx) * f;
        }
        return acc;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = (pde == PdeKind::hatC ? i : 0); j < n; ++j)
            for (std::size_t k = (pde == PdeKind::hatC ? j : 0); k < n; ++k)
                for (std::size_t l = (pde == PdeKind::hatC ? k : 0); l < n; ++l) {
                    const Polynomial lhs = det * table.fourth(i, j, k, l);
                    Polynomial rhs(n);
                    if (pde == PdeKind::hatC)
                        rhs = Rational(1, 2) * (term(i, j, k, l) + term(i, k, j, l) + term(i, l, j, k));
                    else
                        rhs = term(i, j, k, l);
                    if (!(lhs == rhs)) return false;
                }
    return true;
}

/// gamma = F''(y), K^d_{ab} = -1/2 sum_r F_{abr}(y) (F''(y)^{-1})_{rd}.
inline MetrisedAlgebra algebra_at_point(const Polynomial& f, std::span<const Rational> y) {
    const std::size_t n = f.nvars();
    const DerivativeTable table(f);
    const auto v = table.at(y);
    const Matrix hinv = detail::inverse_at(v.h);
    const auto a = detail::contract_inverse(n, v.t3, hinv);
    std::vector<Rational> k(n * n * n);
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = -a[i] / 2;
    return MetrisedAlgebra(Algebra::from_tensor(n, k), v.h);
}
inline MetrisedAlgebra algebra_at_point(const Polynomial& f, const Vector& y) {
    return algebra_at_point(f, std::span<const Rational>(y));
}

/// gamma (I + 2L_x + U_x)^{-1}
inline Matrix dzeta_matrix_at(const MetrisedAlgebra& m, const Vector& x) {
    const auto cert = quasi_regular_certificate(m.algebra(), x);
    if (sgn(cert.det) == 0) throw PreconditionError("element is not quasi-regular");
    return m.gamma() * mat_inverse(cert.op);
}

}  // namespace parcubic

#endif
