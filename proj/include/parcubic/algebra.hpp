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

#ifndef PARCUBIC_ALGEBRA_HPP
#define PARCUBIC_ALGEBRA_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace parcubic {

/// One structure constant K^delta_{alpha beta}, 0-based, alpha <= beta.
struct StructureConstant {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::size_t delta = 0;
    Rational value;

    friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Finite-dimensional commutative algebra over Q given by its structure constants.
/// Only entries with alpha <= beta are accepted; the mirrored entry is implied.
class Algebra {
   public:
    Algebra() = default;
    explicit Algebra(std::size_t n) : n_(n), k_(n * n * n, Rational(0)) {}

    Algebra(std::size_t n, const std::vector<StructureConstant>& constants) : Algebra(n) {
        std::vector<bool> seen(n * n * n, false);
        for (const auto& c : constants) {
            if (c.alpha >= n || c.beta >= n || c.delta >= n)
                throw DimensionError("structure constant index out of range");
            if (c.alpha > c.beta)
                throw PreconditionError("structure constant with alpha > beta; list each pair once with alpha <= beta");
            const std::size_t at = index(c.alpha, c.beta, c.delta);
            if (seen[at]) throw PreconditionError("duplicate structure constant");
            seen[at] = true;
            put(c.alpha, c.beta, c.delta, c.value);
        }
    }

    std::size_t dim() const noexcept { return n_; }

    const Rational& k(std::size_t alpha, std::size_t beta, std::size_t delta) const {
        return k_[index(alpha, beta, delta)];
    }

    /// Nonzero constants with alpha <= beta, ordered by (alpha, beta, delta).
    std::vector<StructureConstant> constants() const {
        std::vector<StructureConstant> out;
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = a; b < n_; ++b)
                for (std::size_t d = 0; d < n_; ++d)
                    if (sgn(k(a, b, d)) != 0) out.push_back({a, b, d, k(a, b, d)});
        return out;
    }

    bool is_zero_algebra() const {
        return std::all_of(k_.begin(), k_.end(), [](const Rational& q) { return sgn(q) == 0; });
    }

    /// Builds an algebra from a full tensor t[alpha][beta][delta]; throws unless t is symmetric in alpha, beta.
    static Algebra from_tensor(std::size_t n, const std::vector<Rational>& t) {
        if (t.size() != n * n * n) throw DimensionError("structure tensor has wrong size");
        Algebra a(n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t d = 0; d < n; ++d)
                    if (t[(x * n + y) * n + d] != t[(y * n + x) * n + d])
                        throw PreconditionError("structure tensor is not commutative");
        a.k_ = t;
        return a;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) { return a.n_ == b.n_ && a.k_ == b.k_; }

   private:
    std::size_t index(std::size_t a, std::size_t b, std::size_t d) const { return (a * n_ + b) * n_ + d; }

    void put(std::size_t a, std::size_t b, std::size_t d, const Rational& v) {
        k_[index(a, b, d)] = v;
        k_[index(b, a, d)] = v;
    }

    std::size_t n_ = 0;
    std::vector<Rational> k_;  // dense, symmetric in the first two slots
};

/// (x . y)_delta = sum K^delta_{alpha beta} x_alpha y_beta, for rational or polynomial coordinates.
template <class Scalar>
std::vector<Scalar> multiply(const Algebra& a, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw DimensionError("element length differs from algebra dimension");
    if (n == 0) return {};
    std::vector<Scalar> out(n, zero_like(x[0]));
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = 0; be < n; ++be) {
            bool computed = false;
            Scalar prod;
            for (std::size_t d = 0; d < n; ++d) {
                const Rational& c = a.k(al, be, d);
                if (sgn(c) == 0) continue;
                if (!computed) {
                    prod = x[al] * y[be];
                    computed = true;
                }
                out[d] += c * prod;
            }
        }
    return out;
}

/// Right-nested power x^k = x . x^{k-1}; k = 0 is rejected since no unit is assumed.
template <class Scalar>
std::vector<Scalar> power(const Algebra& a, const std::vector<Scalar>& x, unsigned k) {
    if (k == 0) throw PreconditionError("power k = 0 needs a unit element");
    std::vector<Scalar> p = x;
    for (unsigned i = 1; i < k; ++i) p = multiply(a, x, p);
    return p;
}

/// Matrix of y -> x . y, i.e. (L_x)_{delta beta} = sum_alpha K^delta_{alpha beta} x_alpha.
inline Matrix l_operator(const Algebra& a, const Vector& x) {
    const std::size_t n = a.dim();
    if (x.size() != n) throw DimensionError("element length differs from algebra dimension");
    Matrix l(n, n);
    for (std::size_t al = 0; al < n; ++al) {
        if (sgn(x[al]) == 0) continue;
        for (std::size_t be = 0; be < n; ++be)
            for (std::size_t d = 0; d < n; ++d)
                if (sgn(a.k(al, be, d)) != 0) l(d, be) += a.k(al, be, d) * x[al];
    }
    return l;
}

/// U_x = 2 L_x^2 - L_{x^2}
inline Matrix u_operator(const Algebra& a, const Vector& x) {
    const Matrix l = l_operator(a, x);
    return Rational(2) * (l * l) - l_operator(a, multiply(a, x, x));
}

namespace detail {

inline std::vector<Polynomial> symbolic_element(std::size_t n, std::size_t nvars, std::size_t offset) {
    std::vector<Polynomial> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(Polynomial::variable(nvars, offset + i));
    return v;
}

}  // namespace detail

/// Decides [L_x, L_{x^2}] = 0 through its full polarization in x:
/// [L_a, L_{bc}] + [L_b, L_{ac}] + [L_c, L_{ab}] = 0 for all basis indices a <= b <= c.
inline bool is_jordan(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Matrix> l;
    for (std::size_t i = 0; i < n; ++i) l.push_back(l_operator(a, unit_vector(n, i)));
    // lp[i * n + j] = L_{e_i . e_j}
    std::vector<Matrix> lp(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Matrix m(n, n);
            for (std::size_t d = 0; d < n; ++d)
                if (sgn(a.k(i, j, d)) != 0) m = m + a.k(i, j, d) * l[d];
            lp[i * n + j] = m;
            lp[j * n + i] = std::move(m);
        }
    auto commutator = [](const Matrix& u, const Matrix& v) { return u * v - v * u; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                const Matrix s = commutator(l[i], lp[j * n + k]) + commutator(l[j], lp[i * n + k]) +
                                 commutator(l[k], lp[i * n + j]);
                if (!s.is_zero()) return false;
            }
    return true;
}

/// sum_rho K^alpha_{beta rho} K^rho_{gamma delta} = sum_rho K^alpha_{gamma rho} K^rho_{beta delta}
inline bool is_associative(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t d = 0; d < n; ++d) {
                    Rational lhs = 0, rhs = 0;
                    for (std::size_t r = 0; r < n; ++r) {
                        lhs += a.k(b, r, al) * a.k(g, d, r);
                        rhs += a.k(g, r, al) * a.k(b, d, r);
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

/// Ascending chain C_0 = {0} ⊂ C_1 ⊂ ..., each given by a basis (RREF kernel vectors).
struct CentralSeries {
    std::vector<std::vector<Vector>> subspaces;
    bool terminal = false;  ///< the chain reached the whole algebra

    std::size_t length() const { return subspaces.size(); }
};

/// C_{k+1} = {x : x . y in C_k for all y}. Stops as soon as the chain stabilizes.
inline CentralSeries central_ascending_series(const Algebra& a) {
    const std::size_t n = a.dim();
    CentralSeries s;
    s.subspaces.emplace_back();
    std::vector<Matrix> ls;
    for (std::size_t j = 0; j < n; ++j) ls.push_back(l_operator(a, unit_vector(n, j)));
    while (true) {
        const auto& current = s.subspaces.back();
        if (current.size() == n) {
            s.terminal = true;
            break;
        }
        // rows of q span the annihilator of C_k, so q z = 0 iff z in C_k
        Matrix ck_rows(current.size(), n);
        for (std::size_t r = 0; r < current.size(); ++r)
            for (std::size_t c = 0; c < n; ++c) ck_rows(r, c) = current[r][c];
        const auto q_vectors = mat_kernel(ck_rows);
        Matrix q(q_vectors.size(), n);
        for (std::size_t r = 0; r < q_vectors.size(); ++r)
            for (std::size_t c = 0; c < n; ++c) q(r, c) = q_vectors[r][c];
        Matrix stacked(q.rows() * n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix block = q * ls[j];
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < n; ++c) stacked(j * q.rows() + r, c) = block(r, c);
        }
        auto next = mat_kernel(stacked);
        if (next.size() == current.size()) break;
        s.subspaces.push_back(std::move(next));
    }
    return s;
}

inline bool is_nilpotent(const Algebra& a) { return central_ascending_series(a).terminal; }

struct QuasiRegularCertificate {
    Rational det;
    Matrix op;  ///< I + 2 L_x + U_x
};

inline QuasiRegularCertificate quasi_regular_certificate(const Algebra& a, const Vector& x) {
    Matrix m = Matrix::identity(a.dim()) + Rational(2) * l_operator(a, x) + u_operator(a, x);
    Rational d = mat_det(m);
    return {d, std::move(m)};
}

/// (-x)^{(-1)} = (I + 2 L_x + U_x)^{-1} (x + x^2). The defining relation x . y = x - y is checked
/// before returning.
inline Vector quasi_inverse_neg(const Algebra& a, const Vector& x) {
    const auto cert = quasi_regular_certificate(a, x);
    if (sgn(cert.det) == 0) throw PreconditionError("element is not quasi-regular");
    Vector rhs = x;
    const Vector x2 = multiply(a, x, x);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += x2[i];
    Vector y = mat_inverse(cert.op) * rhs;
    const Vector xy = multiply(a, x, y);
    for (std::size_t i = 0; i < y.size(); ++i)
        if (xy[i] != x[i] - y[i]) throw Error("quasi-inverse postcondition x.y = x - y failed");
    return y;
}

/// Structure constants in the basis given by the columns of b: K' = b^{-1} K(b., b.).
inline Algebra transform(const Algebra& a, const Matrix& b) {
    const std::size_t n = a.dim();
    if (b.rows() != n || b.cols() != n) throw DimensionError("basis change has wrong shape");
    const Matrix binv = mat_inverse(b);
    const auto cols = b.columns();
    std::vector<Rational> t(n * n * n, Rational(0));
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = al; be < n; ++be) {
            const Vector coords = binv * multiply(a, cols[al], cols[be]);
            for (std::size_t d = 0; d < n; ++d) {
                t[(al * n + be) * n + d] = coords[d];
                t[(be * n + al) * n + d] = coords[d];
            }
        }
    return Algebra::from_tensor(n, t);
}

}  // namespace parcubic

#endif
