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

#ifndef PARCUBIC_METRISED_ALGEBRA_HPP
#define PARCUBIC_METRISED_ALGEBRA_HPP

#include <cstddef>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "matrix.hpp"

namespace parcubic {

/// An algebra together with a symmetric non-degenerate bilinear form gamma.
class MetrisedAlgebra {
   public:
    MetrisedAlgebra(Algebra algebra, Matrix gamma) : algebra_(std::move(algebra)), gamma_(std::move(gamma)) {
        if (gamma_.rows() != algebra_.dim() || gamma_.cols() != algebra_.dim())
            throw DimensionError("gamma must be an n x n matrix");
        if (!gamma_.is_symmetric()) throw PreconditionError("gamma is not symmetric");
        if (sgn(mat_det(gamma_)) == 0) throw PreconditionError("gamma is degenerate");
    }

    const Algebra& algebra() const noexcept { return algebra_; }
    const Matrix& gamma() const noexcept { return gamma_; }
    std::size_t dim() const noexcept { return algebra_.dim(); }

    friend bool operator==(const MetrisedAlgebra&, const MetrisedAlgebra&) = default;

   private:
    Algebra algebra_;
    Matrix gamma_;
};

/// Lowered tensor T_{alpha beta delta} = sum_rho gamma_{delta rho} K^rho_{alpha beta} must be totally symmetric.
inline bool is_trace_form(const MetrisedAlgebra& m) {
    const std::size_t n = m.dim();
    const Algebra& a = m.algebra();
    std::vector<Rational> t(n * n * n, Rational(0));
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = 0; be < n; ++be)
            for (std::size_t d = 0; d < n; ++d)
                for (std::size_t r = 0; r < n; ++r) t[(al * n + be) * n + d] += m.gamma()(d, r) * a.k(al, be, r);
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = 0; be < n; ++be)
            for (std::size_t d = 0; d < n; ++d)
                if (t[(al * n + be) * n + d] != t[(al * n + d) * n + be]) return false;
    return true;
}

/// New basis given by the columns of b: K transforms as in parcubic::transform, gamma' = b^T gamma b.
inline MetrisedAlgebra change_basis(const MetrisedAlgebra& m, const Matrix& b) {
    return MetrisedAlgebra(transform(m.algebra(), b), b.transpose() * m.gamma() * b);
}

/// Block-diagonal sum; coordinates are ordered summand by summand.
inline MetrisedAlgebra direct_sum(const std::vector<MetrisedAlgebra>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.dim();
    std::vector<StructureConstant> ks;
    Matrix gamma(n, n);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (auto c : p.algebra().constants()) {
            c.alpha += off;
            c.beta += off;
            c.delta += off;
            ks.push_back(std::move(c));
        }
        for (std::size_t i = 0; i < p.dim(); ++i)
            for (std::size_t j = 0; j < p.dim(); ++j) gamma(off + i, off + j) = p.gamma()(i, j);
        off += p.dim();
    }
    return MetrisedAlgebra(Algebra(n, ks), gamma);
}

/// Dimension of {D : D(x.y) = Dx.y + x.Dy, gamma(Dx,y) + gamma(x,Dy) = 0}, the Lie algebra of the
/// metrised automorphism group.
inline std::size_t skew_derivation_dim(const MetrisedAlgebra& m) {
    const std::size_t n = m.dim();
    const Algebra& a = m.algebra();
    const Matrix& g = m.gamma();
    // unknown D_{ij} sits in column i*n + j; D e_j = sum_i D_{ij} e_i
    auto col = [n](std::size_t i, std::size_t j) { return i * n + j; };
    std::vector<Vector> rows;
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = al; be < n; ++be) {
            for (std::size_t i = 0; i < n; ++i) {
                Vector r = zero_vector(n * n);
                for (std::size_t d = 0; d < n; ++d) r[col(i, d)] += a.k(al, be, d);
                for (std::size_t s = 0; s < n; ++s) {
                    r[col(s, al)] -= a.k(s, be, i);
                    r[col(s, be)] -= a.k(al, s, i);
                }
                if (!is_zero(r)) rows.push_back(std::move(r));
            }
            // gamma(D e_al, e_be) + gamma(e_al, D e_be) = sum_s D_{s al} g_{s be} + D_{s be} g_{al s}
            Vector r = zero_vector(n * n);
            for (std::size_t s = 0; s < n; ++s) {
                r[col(s, al)] += g(s, be);
                r[col(s, be)] += g(al, s);
            }
            if (!is_zero(r)) rows.push_back(std::move(r));
        }
    Matrix sys(rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c) sys(r, c) = rows[r][c];
    return n * n - rank(sys);
}

}  // namespace parcubic

#endif
