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

#ifndef PARCUBIC_CANONICAL_HPP
#define PARCUBIC_CANONICAL_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "metrised_algebra.hpp"

namespace parcubic {

/// Complete flag V_1 ⊂ ... ⊂ V_n stored as an adapted basis: V_k = span(vectors[0..k)).
struct Flag {
    std::vector<Vector> vectors;

    std::size_t dim() const { return vectors.size(); }

    /// Basis matrix (as columns) of V_k, 0 <= k <= n.
    Matrix subspace(std::size_t k) const {
        if (k > vectors.size()) throw DimensionError("flag index out of range");
        return Matrix::from_columns(std::vector<Vector>(vectors.begin(), vectors.begin() + k), dim());
    }
};

/// Blocks of size one or two, 0-based indices.
struct Partition {
    std::vector<std::vector<std::size_t>> blocks;

    std::size_t two_blocks() const {
        return static_cast<std::size_t>(
            std::count_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 2; }));
    }

    /// Sorts indices inside blocks and blocks by smallest element.
    void normalize_order() {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

struct CanonicalResult {
    Matrix basis_change;  ///< columns are the new basis vectors in old coordinates
    MetrisedAlgebra result;
    Partition partition;
    Flag flag;
    bool non_unit_diagonal = false;  ///< some singleton gamma entry could not be scaled to +-1 over Q
};

/// Completes the central ascending series to a full flag. Inside each gap C_k -> C_{k+1}, standard
/// basis vectors are adjoined lowest index first; when none fits, the kernel basis of C_{k+1} is used.
inline Flag complete_flag(const Algebra& a) {
    const std::size_t n = a.dim();
    const CentralSeries series = central_ascending_series(a);
    if (!series.terminal) throw PreconditionError("algebra is not nilpotent; the central series stalls");
    Flag f;
    for (std::size_t k = 1; k < series.subspaces.size(); ++k) {
        const auto& target = series.subspaces[k];
        std::vector<Vector> candidates;
        for (std::size_t i = 0; i < n; ++i) candidates.push_back(unit_vector(n, i));
        candidates.insert(candidates.end(), target.begin(), target.end());
        for (const auto& c : candidates) {
            if (f.vectors.size() == target.size()) break;
            if (!in_span(target, c) || in_span(f.vectors, c)) continue;
            f.vectors.push_back(c);
        }
    }
    std::vector<Matrix> ls;
    for (std::size_t j = 0; j < n; ++j) ls.push_back(l_operator(a, unit_vector(n, j)));
    for (std::size_t k = 1; k <= n; ++k) {
        const std::vector<Vector> lower(f.vectors.begin(), f.vectors.begin() + static_cast<std::ptrdiff_t>(k - 1));
        for (const auto& l : ls)
            if (!in_span(lower, l * f.vectors[k - 1])) throw Error("flag completion violates V_k . A ⊂ V_{k-1}");
    }
    return f;
}

namespace detail {

struct FormBasis {
    std::vector<Vector> basis;
    std::vector<std::vector<std::size_t>> blocks;
    bool non_unit = false;
};

inline FormBasis can_form_recursive(const Matrix& g, const std::vector<Vector>& w) {
    FormBasis out;
    const std::size_t d = w.size();
    if (d == 0) return out;
    const Vector& v1 = w[0];
    const Rational q = bilinear(g, v1, v1);
    if (sgn(q) != 0) {
        // case 1: scale v1 to gamma(v1,v1) = +-r, r square-free (r = 1 when possible)
        const auto [s, r] = square_class(q);
        Vector v = v1;
        for (auto& c : v) c /= s;
        const Rational qv = bilinear(g, v, v);
        std::vector<Vector> rest;
        for (std::size_t j = 1; j < d; ++j) {
            const Rational f = bilinear(g, w[j], v) / qv;
            Vector p = w[j];
            for (std::size_t i = 0; i < p.size(); ++i) p[i] -= f * v[i];
            rest.push_back(std::move(p));
        }
        FormBasis sub = can_form_recursive(g, rest);
        out.basis.push_back(v);
        out.blocks.push_back({0});
        for (auto& b : sub.basis) out.basis.push_back(std::move(b));
        for (auto blk : sub.blocks) {
            for (auto& i : blk) ++i;
            out.blocks.push_back(std::move(blk));
        }
        out.non_unit = sub.non_unit || r != 1;
        return out;
    }
    // case 2: isotropic v1; partner built from the first flag vector not orthogonal to it
    std::size_t l = 1;
    while (l < d && sgn(bilinear(g, v1, w[l])) == 0) ++l;
    if (l == d) throw PreconditionError("gamma is degenerate on the flag");
    Vector vt = w[l];
    {
        const Rational c = bilinear(g, v1, vt);
        for (auto& x : vt) x /= c;
    }
    const Rational half = bilinear(g, vt, vt) / 2;
    Vector vl = vt;
    for (std::size_t i = 0; i < vl.size(); ++i) vl[i] -= half * v1[i];
    std::vector<Vector> rest;
    for (std::size_t j = 1; j < d; ++j) {
        if (j == l) continue;
        const Rational a = bilinear(g, w[j], vl);
        const Rational b = bilinear(g, w[j], v1);
        Vector p = w[j];
        for (std::size_t i = 0; i < p.size(); ++i) p[i] -= a * v1[i] + b * vl[i];
        rest.push_back(std::move(p));
    }
    FormBasis sub = can_form_recursive(g, rest);
    // positions: v1 -> 0, vl -> l, sub index i -> i+1 for i < l-1, else i+2
    out.basis.assign(d, Vector{});
    out.basis[0] = v1;
    out.basis[l] = vl;
    auto place = [l](std::size_t i) { return i + 1 < l ? i + 1 : i + 2; };
    for (std::size_t i = 0; i < sub.basis.size(); ++i) out.basis[place(i)] = std::move(sub.basis[i]);
    out.blocks.push_back({0, l});
    for (auto blk : sub.blocks) {
        for (auto& i : blk) i = place(i);
        out.blocks.push_back(std::move(blk));
    }
    out.non_unit = sub.non_unit;
    return out;
}

}  // namespace detail

struct FormBasisResult {
    Matrix basis;  ///< columns v_1..v_n
    Partition partition;
    bool non_unit_diagonal = false;
};

/// Basis adapted to the flag in which gamma splits into +-1 entries and hyperbolic 2x2 blocks.
inline FormBasisResult can_form_basis(const Matrix& gamma, const Flag& flag) {
    const std::size_t n = gamma.rows();
    if (!gamma.is_symmetric() || flag.dim() != n) throw DimensionError("gamma and flag sizes differ");
    if (sgn(mat_det(gamma)) == 0) throw PreconditionError("gamma is degenerate");
    detail::FormBasis fb = detail::can_form_recursive(gamma, flag.vectors);
    FormBasisResult r{Matrix::from_columns(fb.basis, n), Partition{fb.blocks}, fb.non_unit};
    r.partition.normalize_order();
    return r;
}

/// Property i: K^delta_{alpha beta} = 0 whenever delta >= min(alpha, beta).
inline bool has_descending_products(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = al; be < n; ++be)
            for (std::size_t d = al; d < n; ++d)
                if (sgn(a.k(al, be, d)) != 0) return false;
    return true;
}

/// Property ii: gamma block diagonal along S with blocks +1, -1 or [[0,1],[1,0]].
inline bool gamma_matches_partition(const Matrix& g, const Partition& s) {
    const std::size_t n = g.rows();
    std::vector<std::size_t> block_of(n, n);
    for (std::size_t b = 0; b < s.blocks.size(); ++b)
        for (auto i : s.blocks[b]) {
            if (i >= n || block_of[i] != n) return false;
            block_of[i] = b;
        }
    for (std::size_t i = 0; i < n; ++i)
        if (block_of[i] == n) return false;
    for (const auto& blk : s.blocks) {
        if (blk.size() == 1) {
            const Rational& v = g(blk[0], blk[0]);
            if (v != 1 && v != -1) return false;
        } else if (blk.size() == 2) {
            if (sgn(g(blk[0], blk[0])) != 0 || sgn(g(blk[1], blk[1])) != 0 || g(blk[0], blk[1]) != 1) return false;
        } else {
            return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (block_of[i] != block_of[j] && sgn(g(i, j)) != 0) return false;
    return true;
}

inline bool verify_semi_canonical(const MetrisedAlgebra& m, const Partition& s) {
    return has_descending_products(m.algebra()) && gamma_matches_partition(m.gamma(), s);
}

namespace detail {

/// Exchanges basis vectors i and i+1 and relabels the partition.
inline void swap_adjacent(CanonicalResult& r, std::size_t i) {
    const std::size_t n = r.result.dim();
    Matrix p = Matrix::identity(n);
    p(i, i) = 0;
    p(i + 1, i + 1) = 0;
    p(i, i + 1) = 1;
    p(i + 1, i) = 1;
    r.result = change_basis(r.result, p);
    r.basis_change = r.basis_change * p;
    for (auto& blk : r.partition.blocks)
        for (auto& x : blk) {
            if (x == i)
                x = i + 1;
            else if (x == i + 1)
                x = i;
        }
    if (!has_descending_products(r.result.algebra()))
        throw Error("adjacent exchange broke the descending product property");
}

inline std::size_t partner_of(const Partition& s, std::size_t i) {
    for (const auto& blk : s.blocks)
        if (std::find(blk.begin(), blk.end(), i) != blk.end()) return blk.size() == 2 ? (blk[0] == i ? blk[1] : blk[0]) : i;
    throw Error("index missing from partition");
}

}  // namespace detail

/// Moves the 2-blocks to {j, n-1-j} by legal adjacent exchanges and sorts the remaining singletons
/// by decreasing gamma.
inline CanonicalResult normalize_partition(CanonicalResult r) {
    if (!verify_semi_canonical(r.result, r.partition) && !(r.non_unit_diagonal && has_descending_products(r.result.algebra())))
        throw PreconditionError("input is not in semi-canonical form");
    const std::size_t n = r.result.dim();
    const std::size_t m = r.partition.two_blocks();
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t target = n - 1 - j;
        if (detail::partner_of(r.partition, j) == target) continue;
        if (detail::partner_of(r.partition, j) == j) {
            std::size_t i = j;
            while (i + 1 < n && detail::partner_of(r.partition, i + 1) == i + 1) ++i;
            if (i + 1 >= n || detail::partner_of(r.partition, i + 1) < i + 1)
                throw Error("partition normalization: no pair to move forward");
            detail::swap_adjacent(r, i);
            while (i > j) {
                detail::swap_adjacent(r, i - 1);
                --i;
            }
        }
        std::size_t i = detail::partner_of(r.partition, j);
        while (i < target) {
            detail::swap_adjacent(r, i);
            ++i;
        }
    }
    // bubble sort of the middle singletons, larger gamma first
    for (std::size_t pass = 0; pass + 2 * m < n; ++pass)
        for (std::size_t i = m; i + 1 < n - m; ++i)
            if (r.result.gamma()(i, i) < r.result.gamma()(i + 1, i + 1)) detail::swap_adjacent(r, i);
    r.partition.normalize_order();
    return r;
}

/// Flag completion, form basis, change of coordinates, then partition normalization.
inline CanonicalResult semi_canonicalize(const MetrisedAlgebra& m) {
    if (!is_jordan(m.algebra())) throw PreconditionError("algebra is not Jordan");
    if (!is_trace_form(m)) throw PreconditionError("gamma is not a trace form");
    Flag flag = complete_flag(m.algebra());
    FormBasisResult fb = can_form_basis(m.gamma(), flag);
    CanonicalResult r{fb.basis, change_basis(m, fb.basis), fb.partition, std::move(flag), fb.non_unit_diagonal};
    r = normalize_partition(std::move(r));
    if (!has_descending_products(r.result.algebra()))
        throw Error("semi-canonical form violates the descending product property");
    if (!r.non_unit_diagonal && !verify_semi_canonical(r.result, r.partition))
        throw Error("semi-canonical form check failed");
    return r;
}

}  // namespace parcubic

#endif
