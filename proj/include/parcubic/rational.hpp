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

#ifndef PARCUBIC_RATIONAL_HPP
#define PARCUBIC_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "error.hpp"

namespace parcubic {

/// Arbitrary precision fraction. GMP keeps it canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

/// num/den in canonical form. The two-argument mpq_class constructor does not reduce.
inline Rational ratio(long num, long den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// Parses "p", "p/q", "-p/q". A leading U+2212 minus sign is accepted as well.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.rfind("−", 0) == 0) s.replace(0, 3, "-");
    if (s.empty()) throw ParseError("empty rational literal");

    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') pos = 1;
    const auto slash = s.find('/');
    auto all_digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t i = from; i < to; ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
    if (!all_digits(pos, num_end) || (slash != std::string::npos && !all_digits(slash + 1, s.size())))
        throw ParseError("malformed rational literal '" + std::string(text) + "'");

    mpz_class num(s.substr(pos, num_end - pos), 10);
    mpz_class den(1);
    if (slash != std::string::npos) {
        den = mpz_class(s.substr(slash + 1), 10);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (s[0] == '-') num = -num;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Exact square root when q is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class rn = sqrt(num);
    mpz_class rd = sqrt(den);
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

/// Writes |q| = s^2 * r with r a square-free positive integer and returns (s, r). q must be nonzero.
inline std::pair<Rational, mpz_class> square_class(const Rational& q) {
    // |p/q| = |p*q| / q^2, then strip square factors of |p*q| by trial division.
    mpz_class m = abs(q.get_num()) * q.get_den();
    mpz_class square_root_part = 1;
    mpz_class free_part = 1;
    for (mpz_class d = 2; d * d <= m; ++d) {
        unsigned count = 0;
        while (m % d == 0) {
            m /= d;
            ++count;
        }
        for (unsigned i = 0; i + 1 < count; i += 2) square_root_part *= d;
        if (count % 2 == 1) free_part *= d;
    }
    free_part *= m;
    Rational s(square_root_part, q.get_den());
    s.canonicalize();
    return {s, free_part};
}

}  // namespace parcubic

#endif
