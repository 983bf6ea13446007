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

#ifndef PARCUBIC_METRISED_HPP
#define PARCUBIC_METRISED_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "canonical.hpp"
#include "matrix.hpp"
#include "metrised_algebra.hpp"

namespace parcubic {

/// Result of the reducibility scan. Blocks index the columns of `basis` (0-based).
struct SplitReport {
    bool found = false;
    std::string criterion;  ///< "prefix", "annihilator" or "coordinate"
    Matrix basis;
    std::vector<std::size_t> block_a;
    std::vector<std::size_t> block_b;
    std::optional<Vector> witness;
};

namespace detail {

/// span(basis columns in I) and span(the rest) are gamma-orthogonal ideals.
inline bool is_coordinate_split(const MetrisedAlgebra& m, const std::vector<bool>& in_a) {
    const std::size_t n = m.dim();
    const Algebra& a = m.algebra();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool same = in_a[i] == in_a[j];
            if (!same && sgn(m.gamma()(i, j)) != 0) return false;
            for (std::size_t d = 0; d < n; ++d) {
                if (sgn(a.k(i, j, d)) == 0) continue;
                if (!same) return false;          // cross products must vanish
                if (in_a[d] != in_a[i]) return false;  // blocks closed under products
            }
        }
    return true;
}

inline std::optional<SplitReport> coordinate_scan(const MetrisedAlgebra& m, const Matrix& basis) {
    const std::size_t n = m.dim();
    if (n < 2 || n > 20) return std::nullopt;
    // index 0 always in block a, so each bipartition is visited once
    for (unsigned long mask = 0; mask + 1 < (1ul << (n - 1)); ++mask) {
        std::vector<bool> in_a(n, false);
        in_a[0] = true;
        for (std::size_t i = 1; i < n; ++i) in_a[i] = ((mask >> (i - 1)) & 1ul) != 0;
        if (!is_coordinate_split(m, in_a)) continue;
        SplitReport r;
        r.found = true;
        r.criterion = "coordinate";
        r.basis = basis;
        for (std::size_t i = 0; i < n; ++i) (in_a[i] ? r.block_a : r.block_b).push_back(i);
        return r;
    }
    return std::nullopt;
}

}  // namespace detail

/// Sufficient criteria for reducibility, tried in order:
///  prefix      - in semi-canonical form, span(e_1..e_k) is gamma-orthogonal to span(e_{k+1}..e_n);
///  annihilator - an element v with v . A = 0 and gamma(v,v) != 0;
///  coordinate  - a bipartition of a coordinate basis (input or semi-canonical) into orthogonal ideals.
/// found = false only means none of these applies.
inline SplitReport orthogonal_split_scan(const MetrisedAlgebra& m) {
    const std::size_t n = m.dim();
    std::optional<CanonicalResult> canon;
    if (n >= 2 && is_nilpotent(m.algebra())) {
        try {
            canon = semi_canonicalize(m);
        } catch (const PreconditionError&) {
            canon.reset();
        }
    }
    if (canon) {
        const Matrix& g = canon->result.gamma();
        for (std::size_t k = 1; k < n; ++k) {
            bool orthogonal = true;
            for (std::size_t i = 0; i < k && orthogonal; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (sgn(g(i, j)) != 0) {
                        orthogonal = false;
                        break;
                    }
            if (!orthogonal) continue;
            SplitReport r;
            r.found = true;
            r.criterion = "prefix";
            r.basis = canon->basis_change;
            for (std::size_t i = 0; i < n; ++i) (i < k ? r.block_a : r.block_b).push_back(i);
            return r;
        }
    }

    if (n >= 2) {
        Matrix stacked(n * n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix l = l_operator(m.algebra(), unit_vector(n, j));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) stacked(j * n + r, c) = l(r, c);
        }
        const auto ann = mat_kernel(stacked);
        std::vector<Vector> candidates = ann;
        for (std::size_t i = 0; i < ann.size(); ++i)
            for (std::size_t j = i + 1; j < ann.size(); ++j) {
                Vector s = ann[i];
                for (std::size_t t = 0; t < n; ++t) s[t] += ann[j][t];
                candidates.push_back(std::move(s));
            }
        for (const auto& v : candidates) {
            if (sgn(bilinear(m.gamma(), v, v)) == 0) continue;
            Matrix row(1, n);
            const Vector gv = m.gamma() * v;
            for (std::size_t c = 0; c < n; ++c) row(0, c) = gv[c];
            std::vector<Vector> cols{v};
            for (auto& w : mat_kernel(row)) cols.push_back(std::move(w));
            SplitReport r;
            r.found = true;
            r.criterion = "annihilator";
            r.basis = Matrix::from_columns(cols, n);
            r.block_a = {0};
            for (std::size_t i = 1; i < n; ++i) r.block_b.push_back(i);
            r.witness = v;
            return r;
        }
    }

    if (auto r = detail::coordinate_scan(m, Matrix::identity(n))) return *r;
    if (canon)
        if (auto r = detail::coordinate_scan(canon->result, canon->basis_change)) return *r;

    SplitReport none;
    none.basis = Matrix::identity(n);
    return none;
}

struct ValidationReport {
    bool jordan = false;
    bool associative = false;
    bool trace_form = false;
    bool nilpotent = false;
    Signature signature;
    Signature flipped_signature;  ///< signature of -gamma
    Rational det_gamma;
    SplitReport splits;
    std::vector<std::string> failures;  ///< names of failed metrised-Jordan axioms

    bool ok() const { return failures.empty(); }
};

/// Runs every predicate. A metrised Jordan algebra needs jordan and trace_form; the other fields are
/// informational.
inline ValidationReport validate(const MetrisedAlgebra& m) {
    ValidationReport r;
    r.jordan = is_jordan(m.algebra());
    r.associative = is_associative(m.algebra());
    r.trace_form = is_trace_form(m);
    r.nilpotent = is_nilpotent(m.algebra());
    r.signature = sym_signature(m.gamma());
    r.flipped_signature = {r.signature.negatives, r.signature.positives, r.signature.zeros};
    r.det_gamma = mat_det(m.gamma());
    if (!r.jordan) r.failures.emplace_back("jordan");
    if (!r.trace_form) r.failures.emplace_back("trace_form");
    r.splits = orthogonal_split_scan(m);
    return r;
}

/// n <= k(k+5)/2
inline bool dimension_bound_holds(std::size_t n, std::size_t k) { return 2 * n <= k * (k + 5); }

/// m >= -3/2 + sqrt(9/4 + 2 max(k, n-k)), evaluated as (2m+3)^2 >= 9 + 8 max(k, n-k).
inline bool two_block_threshold_holds(std::size_t m, std::size_t n, std::size_t k) {
    const std::size_t mx = std::max(k, n - k);
    return (2 * m + 3) * (2 * m + 3) >= 9 + 8 * mx;
}

struct BoundReport {
    std::size_t n = 0;
    std::size_t k = 0;               ///< min(positives, negatives)
    std::size_t bound = 0;           ///< k(k+5)/2
    bool dimension_bound = false;    ///< n <= bound
    std::size_t two_blocks = 0;      ///< m of the computed semi-canonical form
    bool two_block_threshold = false;
};

inline BoundReport dimension_bound_check(const MetrisedAlgebra& m) {
    if (!is_nilpotent(m.algebra())) throw PreconditionError("dimension bounds need a nilpotent algebra");
    if (m.dim() < 2) throw PreconditionError("dimension bounds need n >= 2");
    const Signature s = sym_signature(m.gamma());
    BoundReport r;
    r.n = m.dim();
    r.k = std::min(s.positives, s.negatives);
    r.bound = r.k * (r.k + 5) / 2;
    r.dimension_bound = dimension_bound_holds(r.n, r.k);
    r.two_blocks = semi_canonicalize(m).partition.two_blocks();
    r.two_block_threshold = two_block_threshold_holds(r.two_blocks, r.n, r.k);
    return r;
}

}  // namespace parcubic

#endif
