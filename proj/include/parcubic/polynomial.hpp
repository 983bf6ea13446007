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

#ifndef PARCUBIC_POLYNOMIAL_HPP
#define PARCUBIC_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace parcubic {

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Ascending total degree; within one degree, lexicographically larger exponent vectors come first.
struct GradedLexOrder {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const unsigned da = total_degree(a);
        const unsigned db = total_degree(b);
        if (da != db) return da < db;
        return b < a;
    }
};

/// Sparse multivariate polynomial in x1..xn with rational coefficients.
/// Variables are addressed by 0-based index in the API and printed 1-based.
class Polynomial {
   public:
    using TermMap = std::map<Exponent, Rational, GradedLexOrder>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw DimensionError("variable index out of range");
        Exponent e(nvars, 0);
        e[i] = 1;
        Polynomial p(nvars);
        p.add_term(e, Rational(1));
        return p;
    }

    static Polynomial monomial(const Exponent& e, const Rational& c) {
        Polynomial p(e.size());
        p.add_term(e, c);
        return p;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Exponent(nvars_, 0)); }

    unsigned degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

    /// Sum of all terms of total degree d.
    Polynomial homogeneous_part(unsigned d) const {
        Polynomial p(nvars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) p.terms_.emplace(e, c);
        return p;
    }

    void add_term(const Exponent& e, const Rational& c) {
        if (e.size() != nvars_) throw DimensionError("exponent vector length differs from nvars");
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        Polynomial out(a.nvars_);
        Exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

   private:
    void require_same_ring(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw DimensionError("polynomials live in different numbers of variables");
    }

    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// Zero of the same ring as the argument; lets generic code start accumulations.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Polynomial zero_like(const Polynomial& p) { return Polynomial(p.nvars()); }

inline Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial r = Polynomial::constant(p.nvars(), Rational(1));
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

/// Partial derivative with respect to the variable with 0-based index var.
inline Polynomial differentiate(const Polynomial& p, std::size_t var) {
    if (var >= p.nvars()) throw DimensionError("differentiation variable out of range");
    Polynomial d(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        d.add_term(f, c * e[var]);
    }
    return d;
}

inline Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.nvars()) throw DimensionError("evaluation point has wrong length");
    // powers[i][k] = point[i]^k, built on demand
    std::vector<std::vector<Rational>> powers(p.nvars(), std::vector<Rational>{Rational(1)});
    Rational sum = 0;
    Rational term;
    for (const auto& [e, c] : p.terms()) {
        term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
            if (e[i] > 0) term *= pw[e[i]];
        }
        sum += term;
    }
    return sum;
}
inline Rational evaluate(const Polynomial& p, const Vector& point) { return evaluate(p, std::span<const Rational>(point)); }

/// p(Ax + b). A has p.nvars() rows; its column count becomes the number of variables of the result.
inline Polynomial substitute_linear(const Polynomial& p, const Matrix& a, std::span<const Rational> b) {
    if (a.rows() != p.nvars() || b.size() != p.nvars()) throw DimensionError("substitution shape mismatch");
    const std::size_t m = a.cols();
    std::vector<Polynomial> images;
    images.reserve(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        Polynomial l = Polynomial::constant(m, b[i]);
        for (std::size_t j = 0; j < m; ++j) l += a(i, j) * Polynomial::variable(m, j);
        images.push_back(std::move(l));
    }
    std::vector<std::vector<Polynomial>> powers(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) powers[i].push_back(Polynomial::constant(m, Rational(1)));
    Polynomial out(m);
    for (const auto& [e, c] : p.terms()) {
        Polynomial t = Polynomial::constant(m, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
            if (e[i] > 0) t *= pw[e[i]];
        }
        out += t;
    }
    return out;
}
inline Polynomial substitute_linear(const Polynomial& p, const Matrix& a, const Vector& b) {
    return substitute_linear(p, a, std::span<const Rational>(b));
}

/// Renames variables: variable i of p becomes variable offset + i of a ring with nvars variables.
inline Polynomial embed(const Polynomial& p, std::size_t nvars, std::size_t offset) {
    if (offset + p.nvars() > nvars) throw DimensionError("embedding does not fit");
    Polynomial out(nvars);
    Exponent f(nvars, 0);
    for (const auto& [e, c] : p.terms()) {
        std::fill(f.begin(), f.end(), 0u);
        std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
        out.add_term(f, c);
    }
    return out;
}

/// Square matrix of polynomials sharing one ring.
class PolyMatrix {
   public:
    PolyMatrix(std::size_t n, std::size_t nvars) : n_(n), nvars_(nvars), entries_(n * n, Polynomial(nvars)) {}

    static PolyMatrix identity(std::size_t n, std::size_t nvars) {
        PolyMatrix m(n, nvars);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(nvars, Rational(1));
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t nvars() const noexcept { return nvars_; }
    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    Matrix evaluate(std::span<const Rational> point) const {
        Matrix m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = parcubic::evaluate((*this)(i, j), point);
        return m;
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

   private:
    std::size_t n_;
    std::size_t nvars_;
    std::vector<Polynomial> entries_;
};

inline PolyMatrix hessian(const Polynomial& p) {
    const std::size_t n = p.nvars();
    PolyMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial di = differentiate(p, i);
        for (std::size_t j = i; j < n; ++j) {
            h(i, j) = differentiate(di, j);
            if (j != i) h(j, i) = h(i, j);
        }
    }
    return h;
}

namespace detail {

/// Laplace expansion along the first row of the minor made of rows [first, n) and the columns in
/// `mask`, memoized on the column mask. Cost is O(2^n) polynomial products.
inline Polynomial minor_det(const PolyMatrix& m, std::size_t first_row, unsigned mask,
                            std::unordered_map<unsigned, Polynomial>& memo) {
    if (mask == 0) return Polynomial::constant(m.nvars(), Rational(1));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial sum(m.nvars());
    int sign = 1;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if ((mask & (1u << j)) == 0) continue;
        if (!m(first_row, j).is_zero()) {
            Polynomial t = m(first_row, j) * minor_det(m, first_row + 1, mask & ~(1u << j), memo);
            if (sign > 0)
                sum += t;
            else
                sum -= t;
        }
        sign = -sign;
    }
    memo.emplace(mask, sum);
    return sum;
}

inline Polynomial poly_det_rows(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols) {
    PolyMatrix sub(rows.size(), m.nvars());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
    std::unordered_map<unsigned, Polynomial> memo;
    return minor_det(sub, 0, rows.empty() ? 0u : (1u << rows.size()) - 1u, memo);
}

}  // namespace detail

/// Exact determinant by memoized cofactor expansion (exponential in the size; fine up to ~10).
inline Polynomial poly_det(const PolyMatrix& m) {
    if (m.size() > 20) throw DimensionError("polynomial determinant limited to size 20");
    std::unordered_map<unsigned, Polynomial> memo;
    return detail::minor_det(m, 0, m.size() == 0 ? 0u : (1u << m.size()) - 1u, memo);
}

/// Classical adjugate: adj(j, i) = (-1)^{i+j} det of m without row i and column j.
inline PolyMatrix poly_adjugate(const PolyMatrix& m) {
    const std::size_t n = m.size();
    PolyMatrix adj(n, m.nvars());
    if (n == 1) {
        adj(0, 0) = Polynomial::constant(m.nvars(), Rational(1));
        return adj;
    }
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rows.clear();
            cols.clear();
            for (std::size_t a = 0; a < n; ++a)
                if (a != i) rows.push_back(a);
            for (std::size_t b = 0; b < n; ++b)
                if (b != j) cols.push_back(b);
            Polynomial c = detail::poly_det_rows(m, rows, cols);
            adj(j, i) = (i + j) % 2 == 0 ? c : -c;
        }
    return adj;
}

inline PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.size() != b.size() || a.nvars() != b.nvars()) throw DimensionError("polynomial matrix shapes differ");
    PolyMatrix c(a.size(), a.nvars());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < a.size(); ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
}

// ---------------------------------------------------------------------------------------------
// text form

namespace detail {

inline std::string monomial_text(const Exponent& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i + 1);
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s;
}

}  // namespace detail

/// Terms in graded order, e.g. "x1*x2 - 1/3*x1^3". The zero polynomial prints as "0".
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        const Rational mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const std::string mono = detail::monomial_text(e);
        if (mono.empty())
            out += format_rational(mag);
        else if (mag == 1)
            out += mono;
        else
            out += format_rational(mag) + "*" + mono;
    }
    return out;
}

/// Parses the text form produced by to_string. Whitespace is ignored, factors may be joined by '*'
/// or juxtaposed, and coefficients may be written "p/q". The ring has max(nvars, largest index seen)
/// variables.
inline Polynomial parse_polynomial(std::string_view text, std::size_t nvars = 0) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    for (std::size_t pos = s.find("−"); pos != std::string::npos; pos = s.find("−")) s.replace(pos, 3, "-");
    if (s.empty()) throw ParseError("empty polynomial");

    struct RawTerm {
        Rational coeff;
        std::vector<std::pair<std::size_t, unsigned>> factors;
    };
    std::vector<RawTerm> raw;
    std::size_t i = 0;
    std::size_t max_var = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("polynomial parse error at offset " + std::to_string(i) + ": " + why);
    };
    auto read_uint = [&]() {
        const std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected digits");
        return s.substr(start, i - start);
    };

    while (i < s.size()) {
        RawTerm t{Rational(1), {}};
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') t.coeff = -1;
            ++i;
        } else if (!raw.empty()) {
            fail("expected '+' or '-'");
        }
        bool have_factor = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (have_factor) {
                if (s[i] == '*') ++i;
                if (i >= s.size()) fail("dangling '*'");
            }
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::string lit = read_uint();
                if (i < s.size() && s[i] == '/') {
                    ++i;
                    lit += '/' + read_uint();
                }
                t.coeff *= parse_rational(lit);
            } else if (s[i] == 'x') {
                ++i;
                const std::size_t idx = std::stoul(read_uint());
                if (idx == 0) fail("variable indices start at 1");
                unsigned power = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    power = static_cast<unsigned>(std::stoul(read_uint()));
                }
                t.factors.emplace_back(idx - 1, power);
                max_var = std::max(max_var, idx);
            } else {
                fail(std::string("unexpected character '") + s[i] + "'");
            }
            have_factor = true;
        }
        if (!have_factor) fail("empty term");
        raw.push_back(std::move(t));
    }

    Polynomial p(std::max(nvars, max_var));
    for (const auto& t : raw) {
        Exponent e(p.nvars(), 0);
        for (const auto& [v, k] : t.factors) e[v] += k;
        p.add_term(e, t.coeff);
    }
    return p;
}

}  // namespace parcubic

#endif
