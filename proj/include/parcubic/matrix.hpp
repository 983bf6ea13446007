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

#ifndef PARCUBIC_MATRIX_HPP
#define PARCUBIC_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace parcubic {

using Vector = std::vector<Rational>;

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v = zero_vector(n);
    v.at(i) = 1;
    return v;
}

inline bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

/// Dense row-major matrix of exact rationals. Indices are 0-based.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionError("ragged matrix literal");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Antidiagonal ones: (i, j) = 1 iff i + j = n - 1.
    static Matrix antidiagonal(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
        return m;
    }

    static Matrix diagonal(std::span<const Rational> d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    /// Matrix whose j-th column is columns[j]. `rows` is only consulted when the list is empty.
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
        const std::size_t r = columns.empty() ? rows : columns.front().size();
        Matrix m(r, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != r) throw DimensionError("columns of unequal length");
            for (std::size_t i = 0; i < r; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rational> entries() const noexcept { return entries_; }

    Vector row(std::size_t i) const { return Vector(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_); }

    Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<Vector> columns() const {
        std::vector<Vector> out;
        out.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const { return parcubic::is_zero(entries_); }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    Matrix& operator*=(const Rational& s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Vector operator*(const Matrix& a, std::span<const Rational> v) {
        if (a.cols_ != v.size()) throw DimensionError("matrix-vector product: length mismatch");
        Vector out = zero_vector(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }
    friend Vector operator*(const Matrix& a, const Vector& v) { return a * std::span<const Rational>(v); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

   private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// u^T g v
inline Rational bilinear(const Matrix& g, std::span<const Rational> u, std::span<const Rational> v) {
    if (!g.is_square() || g.rows() != u.size() || u.size() != v.size())
        throw DimensionError("bilinear form: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (sgn(u[i]) == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * g(i, j) * v[j];
    }
    return s;
}

inline Rational trace(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("trace of a non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

/// Fraction-free (Bareiss) elimination with row pivoting. Every intermediate quotient is exact.
inline Rational mat_det(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    Matrix a = m;
    Rational sign = 1;
    Rational prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

struct AdjugateResult {
    Matrix adjugate;
    Rational det;
};

/// Adjugate by cofactors, so singular input still yields a valid adjugate. inverse = adjugate / det.
inline AdjugateResult mat_adjugate_inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("adjugate of a non-square matrix");
    const std::size_t n = m.rows();
    AdjugateResult r{Matrix(n, n), mat_det(m)};
    if (n == 1) {
        r.adjugate(0, 0) = 1;
        return r;
    }
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // cofactor C_ij goes to adj(j, i)
            for (std::size_t a = 0, ra = 0; a < n; ++a) {
                if (a == i) continue;
                for (std::size_t b = 0, cb = 0; b < n; ++b) {
                    if (b == j) continue;
                    minor(ra, cb++) = m(a, b);
                }
                ++ra;
            }
            Rational c = mat_det(minor);
            if ((i + j) % 2 == 1) c = -c;
            r.adjugate(j, i) = c;
        }
    return r;
}

/// Exact inverse; throws PreconditionError on singular input.
inline Matrix mat_inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(a(p, k)) == 0) ++p;
        if (p == n) throw PreconditionError("matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        const Rational pivot = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= pivot;
            inv(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || sgn(a(i, k)) == 0) continue;
            const Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form; pivots are scanned left to right so the result is deterministic.
inline RowEchelon rref(const Matrix& m) {
    RowEchelon out{m, {}};
    Matrix& a = out.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(p, j));
        const Rational pivot = a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) /= pivot;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || sgn(a(i, col)) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

/// Basis of {v : m v = 0}: one vector per free column, in increasing column order, with that
/// free coordinate equal to 1 and the other free coordinates 0.
inline std::vector<Vector> mat_kernel(const Matrix& m) {
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// True iff v lies in the column span of `basis` (given as a list of vectors).
inline bool in_span(const std::vector<Vector>& basis, const Vector& v) {
    if (basis.empty()) return is_zero(v);
    std::vector<Vector> cols = basis;
    const std::size_t r = rank(Matrix::from_columns(cols, v.size()));
    cols.push_back(v);
    return rank(Matrix::from_columns(cols, v.size())) == r;
}

struct Signature {
    std::size_t positives = 0;
    std::size_t negatives = 0;
    std::size_t zeros = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric matrix by symmetric Gaussian elimination. When every remaining diagonal
/// entry vanishes but an off-diagonal entry a_ij does not, row/column j is added to row/column i,
/// which creates the nonzero pivot 2 a_ij.
inline Signature sym_signature(const Matrix& g) {
    if (!g.is_symmetric()) throw DimensionError("signature requires a symmetric square matrix");
    const std::size_t n = g.rows();
    Matrix a = g;
    Signature s;
    auto swap_sym = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(a(p, p)) == 0) ++p;
        if (p == n) {
            // hyperbolic pair handling
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (sgn(a(i, j)) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                s.zeros += n - k;
                break;
            }
            for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
            for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
            p = pi;
        }
        swap_sym(k, p);
        const Rational pivot = a(k, k);
        (sgn(pivot) > 0 ? s.positives : s.negatives) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a(i, k)) == 0) continue;
            const Rational f = a(i, k) / pivot;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
        }
    }
    return s;
}

}  // namespace parcubic

#endif
