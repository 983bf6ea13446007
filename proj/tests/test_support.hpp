// Shared helpers for the unit tests: printers and independent reference computations.

#ifndef PARCUBIC_TEST_SUPPORT_HPP
#define PARCUBIC_TEST_SUPPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include <parcubic/parcubic.hpp>

namespace parcubic {

inline void PrintTo(const Matrix& m, std::ostream* os) {
    *os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        *os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) *os << (j ? ", " : "") << m(i, j).get_str();
        *os << "]";
    }
    *os << "]";
}

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << to_string(p); }

inline void PrintTo(const Algebra& a, std::ostream* os) {
    *os << "dim " << a.dim() << ":";
    for (const auto& c : a.constants())
        *os << " K^" << c.delta + 1 << "_" << c.alpha + 1 << c.beta + 1 << "=" << c.value.get_str();
}

inline void PrintTo(const MetrisedAlgebra& m, std::ostream* os) {
    PrintTo(m.algebra(), os);
    *os << " gamma ";
    PrintTo(m.gamma(), os);
}

}  // namespace parcubic

namespace oracle {

using parcubic::Exponent;
using parcubic::Polynomial;
using parcubic::Rational;

/// All compositions of `total` into exactly `parts` positive parts.
inline void compositions(unsigned total, unsigned parts, std::vector<unsigned>& prefix,
                         std::vector<std::vector<unsigned>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(prefix);
        return;
    }
    for (unsigned first = 1; first + (parts - 1) <= total; ++first) {
        prefix.push_back(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

/// sum_{d=2}^{n+1} c(d) sum_{i_1+...+i_d = n+1} x_{i_1}...x_{i_d}, expanded term by term.
template <class Coefficient>
Polynomial cayley_family(unsigned n, Coefficient c) {
    Polynomial f(n);
    for (unsigned d = 2; d <= n + 1; ++d) {
        std::vector<std::vector<unsigned>> comps;
        std::vector<unsigned> prefix;
        compositions(n + 1, d, prefix, comps);
        for (const auto& comp : comps) {
            Exponent e(n, 0);
            for (unsigned i : comp) ++e[i - 1];
            f.add_term(e, c(d));
        }
    }
    return f;
}

inline Polynomial cayley_hatC(unsigned n) {
    return cayley_family(n, [](unsigned d) { return parcubic::ratio(d % 2 == 0 ? 1 : -1, d); });
}

inline Polynomial cayley_nablaK(unsigned n) {
    return cayley_family(n, [](unsigned d) {
        Rational num = 1, fact = 1;
        for (unsigned i = 2; i < d; ++i) num *= -2;
        for (unsigned i = 2; i <= d; ++i) fact *= i;
        return Rational(num / fact);
    });
}

/// e_a . (e_b . e_c) style products straight from the structure constants.
inline std::vector<Rational> basis_product(const parcubic::Algebra& a, const std::vector<Rational>& x,
                                           const std::vector<Rational>& y) {
    const std::size_t n = a.dim();
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t d = 0; d < n; ++d) out[d] += a.k(i, j, d) * x[i] * y[j];
    return out;
}

/// Jordan identity through its full polarization in x (valid over Q), checked on all basis quadruples:
/// (x.y).(z.w) + (y.z).(x.w) + (z.x).(y.w) = ((x.y).w).z + ((y.z).w).x + ((z.x).w).y
inline bool jordan_by_linearization(const parcubic::Algebra& a) {
    const std::size_t n = a.dim();
    auto e = [n](std::size_t i) { return parcubic::unit_vector(n, i); };
    auto mul = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) { return basis_product(a, x, y); };
    auto add = [](std::vector<Rational> x, const std::vector<Rational>& y) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return x;
    };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) {
                    const auto x = e(p), y = e(q), z = e(r), w = e(s);
                    auto lhs = add(add(mul(mul(x, y), mul(z, w)), mul(mul(y, z), mul(x, w))), mul(mul(z, x), mul(y, w)));
                    auto rhs = add(add(mul(mul(mul(x, y), w), z), mul(mul(mul(y, z), w), x)), mul(mul(mul(z, x), w), y));
                    if (lhs != rhs) return false;
                }
    return true;
}

/// x . (x^2 . y) = x^2 . (x . y) expanded as a polynomial identity in 2n formal coordinates.
inline bool jordan_by_expansion(const parcubic::Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Polynomial> x, y;
    for (std::size_t i = 0; i < n; ++i) {
        x.push_back(Polynomial::variable(2 * n, i));
        y.push_back(Polynomial::variable(2 * n, n + i));
    }
    const auto x2 = parcubic::multiply(a, x, x);
    return parcubic::multiply(a, x, parcubic::multiply(a, x2, y)) == parcubic::multiply(a, x2, parcubic::multiply(a, x, y));
}

/// -sum_{k>=1} (-x)^k for a nilpotent algebra (the sum is finite).
inline std::vector<Rational> quasi_inverse_series(const parcubic::Algebra& a, const std::vector<Rational>& x) {
    std::vector<Rational> negx = x;
    for (auto& c : negx) c = -c;
    std::vector<Rational> sum(x.size(), Rational(0));
    std::vector<Rational> p = negx;
    for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
        for (std::size_t i = 0; i < x.size(); ++i) sum[i] -= p[i];
        p = basis_product(a, negx, p);
    }
    return sum;
}

/// LHS - RHS of the hatC (cubic = false) or nablaK PDE at one index quadruple, straight from differentiate.
inline Rational pde_entry(const Polynomial& f, const std::vector<Rational>& p, std::size_t a, std::size_t b,
                          std::size_t c, std::size_t d, bool hatc) {
    using parcubic::differentiate;
    using parcubic::evaluate;
    const std::size_t n = f.nvars();
    parcubic::Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = evaluate(differentiate(differentiate(f, i), j), p);
    const parcubic::Matrix hinv = parcubic::mat_inverse(h);
    auto f3 = [&](std::size_t i, std::size_t j, std::size_t k) {
        return evaluate(differentiate(differentiate(differentiate(f, i), j), k), p);
    };
    auto pair = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        Rational s = 0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t q = 0; q < n; ++q) s += f3(i, j, r) * hinv(r, q) * f3(k, l, q);
        return s;
    };
    const Rational lhs = evaluate(differentiate(differentiate(differentiate(differentiate(f, a), b), c), d), p);
    const Rational rhs = hatc ? Rational((pair(a, b, c, d) + pair(a, c, b, d) + pair(a, d, b, c)) / 2) : pair(a, b, c, d);
    return lhs - rhs;
}

// reference five-dimensional hatC polynomials with alpha/3 substituted
inline std::string class5(int line, const Rational& alpha) {
    const std::string a3 = parcubic::format_rational(alpha / 3);
    const std::string head = "x1*x5 + x2*x4 + 1/2*x3^2";
    switch (line) {
        case 1: return head + " - x3*x4^2 - x4*x5^2 + 1/4*x4^4";
        case 2: return head + " - x3*x4^2 - x3*x5^2 + 1/4*x4^4 + 1/2*x4^2*x5^2 + 1/4*x5^4";
        case 3: return head + " - x3*x4^2 - x3*x5^2 - " + a3 + "*x4^3 + 1/4*x4^4 + 1/2*x4^2*x5^2 + 1/4*x5^4";
        case 4: return head + " - 2*x3*x4*x5 + x4^2*x5^2";
        case 5: return head + " - 2*x3*x4*x5 - 1/3*x4^3 + x4^2*x5^2";
        case 6: return head + " - 2*x3*x4*x5 - " + a3 + "*x4^3 - " + a3 + "*x5^3 + x4^2*x5^2";
        default:
            return head + " - 2*x3*x4*x5 - x2*x5^2 - 1/3*x4^3 + x3*x5^3 + 3/2*x4^2*x5^2 - x4*x5^4 + 1/6*x5^6";
    }
}


}  // namespace oracle

#endif
