#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace parcubic;

namespace {

Algebra zero_algebra(std::size_t n) { return Algebra(n); }
Algebra idempotent() { return Algebra(1, {{0, 0, 0, Rational(1)}}); }
Algebra non_jordan() { return Algebra(2, {{0, 0, 1, Rational(1)}, {1, 1, 0, Rational(1)}}); }

std::vector<MetrisedAlgebra> nilpotent_catalog() {
    std::vector<MetrisedAlgebra> out;
    for (std::size_t n = 1; n <= 6; ++n) out.push_back(cayley(n));
    for (const auto& e : list_catalog())
        if (e.key.name.rfind("cayley", 0) != 0) out.push_back(builtin(e.key));
    return out;
}

}  // namespace

TEST(AlgebraType, RejectsBadConstants) {
    EXPECT_THROW(Algebra(2, {{1, 0, 0, Rational(1)}}), PreconditionError);
    EXPECT_THROW(Algebra(2, {{0, 2, 0, Rational(1)}}), DimensionError);
    EXPECT_THROW(Algebra(2, {{0, 1, 0, Rational(1)}, {0, 1, 0, Rational(2)}}), PreconditionError);
    const Algebra a(2, {{0, 1, 0, Rational(3)}});
    EXPECT_EQ(a.k(1, 0, 0), 3);
    EXPECT_EQ(a.constants().size(), 1u);
}

TEST(Multiply, Examples) {
    const Algebra c2 = cayley(2).algebra();
    EXPECT_EQ(multiply(c2, unit_vector(2, 0), unit_vector(2, 0)), unit_vector(2, 1));
    EXPECT_TRUE(is_zero(multiply(zero_algebra(3), Vector{1, 2, 3}, Vector{4, 5, 6})));
    const Algebra c3 = cayley(3).algebra();
    EXPECT_EQ(multiply(c3, unit_vector(3, 0), unit_vector(3, 1)), unit_vector(3, 2));
    EXPECT_THROW(multiply(c3, Vector{1, 2}, Vector{1, 2, 3}), DimensionError);
}

TEST(Power, Examples) {
    const Algebra c3 = cayley(3).algebra();
    const Rational a = 2, b = ratio(-1, 3), c = 5;
    const Vector x{a, b, c};
    EXPECT_EQ(power(c3, x, 2), (Vector{0, a * a, 2 * a * b}));
    EXPECT_EQ(power(c3, x, 3), (Vector{0, 0, a * a * a}));
    EXPECT_EQ(power(c3, x, 1), x);
    EXPECT_THROW(power(c3, x, 0), PreconditionError);
}

TEST(LOperator, Examples) {
    EXPECT_EQ(l_operator(cayley(2).algebra(), Vector{3, 7}), (Matrix{{0, 0}, {3, 0}}));
    EXPECT_TRUE(l_operator(zero_algebra(3), Vector{1, 2, 3}).is_zero());
    EXPECT_EQ(l_operator(idempotent(), Vector{ratio(5, 2)}), (Matrix{{ratio(5, 2)}}));
}

TEST(UOperator, Examples) {
    EXPECT_TRUE(u_operator(zero_algebra(2), Vector{1, 1}).is_zero());
    EXPECT_EQ(u_operator(idempotent(), Vector{3}), (Matrix{{9}}));
    EXPECT_TRUE(u_operator(cayley(2).algebra(), Vector{4, -1}).is_zero());
}

TEST(IsJordan, Examples) {
    EXPECT_TRUE(is_jordan(cayley(3).algebra()));
    EXPECT_FALSE(is_jordan(non_jordan()));
    EXPECT_TRUE(is_jordan(zero_algebra(3)));
    EXPECT_TRUE(is_jordan(idempotent()));
}

TEST(IsJordan, AgreesWithPolarizedOracle) {
    std::vector<Algebra> algebras{non_jordan(), idempotent(), zero_algebra(2)};
    for (const auto& m : nilpotent_catalog()) algebras.push_back(m.algebra());
    // a few random commutative algebras, mostly non-Jordan
    RationalSampler s(99);
    for (int rep = 0; rep < 6; ++rep) {
        std::vector<StructureConstant> ks;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a; b < 3; ++b)
                for (std::size_t d = 0; d < 3; ++d)
                    if ((a + b + d + static_cast<std::size_t>(rep)) % 3 == 0) ks.push_back({a, b, d, s.next()});
        algebras.emplace_back(3, ks);
    }
    for (const auto& a : algebras) {
        EXPECT_EQ(is_jordan(a), oracle::jordan_by_linearization(a));
        EXPECT_EQ(is_jordan(a), oracle::jordan_by_expansion(a));
    }
}

TEST(IsJordan, InvariantUnderBasisChange) {
    RationalSampler s(4);
    for (const auto& key : {"algebras5.2", "bivariate", "class3.2"}) {
        const Algebra a = transform(builtin(key).algebra(), s.invertible_matrix(builtin(key).dim()));
        EXPECT_TRUE(is_jordan(a)) << key;
        EXPECT_TRUE(oracle::jordan_by_expansion(a)) << key;
    }
}

TEST(IsAssociative, Examples) {
    EXPECT_TRUE(is_associative(builtin("algebras4.1").algebra()));
    EXPECT_FALSE(is_associative(builtin("algebras5.2").algebra()));
    EXPECT_TRUE(is_associative(zero_algebra(2)));
}

TEST(CentralSeries, Examples) {
    auto s = central_ascending_series(cayley(3).algebra());
    ASSERT_EQ(s.subspaces.size(), 4u);
    EXPECT_TRUE(s.subspaces[0].empty());
    EXPECT_EQ(s.subspaces[1], (std::vector<Vector>{unit_vector(3, 2)}));
    EXPECT_EQ(s.subspaces[2], (std::vector<Vector>{unit_vector(3, 1), unit_vector(3, 2)}));
    EXPECT_EQ(s.subspaces[3].size(), 3u);
    EXPECT_TRUE(s.terminal);

    s = central_ascending_series(zero_algebra(2));
    ASSERT_EQ(s.subspaces.size(), 2u);
    EXPECT_EQ(s.subspaces[1].size(), 2u);
    EXPECT_TRUE(s.terminal);

    s = central_ascending_series(idempotent());
    EXPECT_EQ(s.subspaces.size(), 1u);
    EXPECT_FALSE(s.terminal);
}

TEST(IsNilpotent, Examples) {
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(is_nilpotent(cayley(n).algebra())) << n;
    EXPECT_FALSE(is_nilpotent(idempotent()));
    EXPECT_TRUE(is_nilpotent(zero_algebra(3)));
}

TEST(QuasiRegular, Examples) {
    EXPECT_EQ(quasi_regular_certificate(zero_algebra(2), Vector{3, 4}).det, 1);
    EXPECT_EQ(quasi_regular_certificate(cayley(2).algebra(), Vector{3, 4}).det, 1);
    const Rational t = ratio(2, 5);
    EXPECT_EQ(quasi_regular_certificate(idempotent(), Vector{t}).det, (1 + t) * (1 + t));
}

TEST(QuasiInverse, Examples) {
    EXPECT_EQ(quasi_inverse_neg(zero_algebra(2), Vector{3, 4}), (Vector{3, 4}));
    const Rational a = 3, b = -2;
    EXPECT_EQ(quasi_inverse_neg(cayley(2).algebra(), Vector{a, b}), (Vector{a, b - a * a}));
    const Rational t = ratio(2, 5);
    EXPECT_EQ(quasi_inverse_neg(idempotent(), Vector{t}), (Vector{t / (1 + t)}));
    EXPECT_THROW(quasi_inverse_neg(idempotent(), Vector{-1}), PreconditionError);
}

TEST(AlgebraProperties, MultiplyIsCommutative) {
    RationalSampler s(1);
    for (const auto& m : nilpotent_catalog())
        for (int k = 0; k < 5; ++k) {
            const Vector x = s.vector(m.dim()), y = s.vector(m.dim());
            EXPECT_EQ(multiply(m.algebra(), x, y), multiply(m.algebra(), y, x));
            EXPECT_EQ(multiply(m.algebra(), x, y), oracle::basis_product(m.algebra(), x, y));
        }
}

TEST(AlgebraProperties, JordanOperatorsCommute) {
    RationalSampler s(2);
    for (const auto& m : nilpotent_catalog()) {
        ASSERT_TRUE(is_jordan(m.algebra()));
        for (int k = 0; k < 50; ++k) {
            const Vector x = s.vector(m.dim());
            const Matrix l = l_operator(m.algebra(), x);
            const Matrix l2 = l_operator(m.algebra(), multiply(m.algebra(), x, x));
            EXPECT_EQ(l * l2, l2 * l);
        }
    }
}

TEST(AlgebraProperties, FundamentalFormula) {
    RationalSampler s(4);
    for (const auto& m : nilpotent_catalog())
        for (int k = 0; k < 10; ++k) {
            const Vector x = s.vector(m.dim()), y = s.vector(m.dim());
            const Matrix ux = u_operator(m.algebra(), x);
            EXPECT_EQ(u_operator(m.algebra(), ux * y), ux * u_operator(m.algebra(), y) * ux);
        }
}

TEST(AlgebraProperties, NilpotentPowersAreTraceless) {
    RationalSampler s(6);
    for (const auto& m : nilpotent_catalog())
        for (int k = 0; k < 5; ++k) {
            const Vector x = s.vector(m.dim());
            for (unsigned r = 1; r <= m.dim() + 1; ++r)
                EXPECT_EQ(trace(l_operator(m.algebra(), power(m.algebra(), x, r))), 0);
        }
}

TEST(AlgebraProperties, QuasiInverseMatchesSeries) {
    RationalSampler s(8);
    for (const auto& m : nilpotent_catalog())
        for (int k = 0; k < 10; ++k) {
            const Vector x = s.vector(m.dim());
            const Vector y = quasi_inverse_neg(m.algebra(), x);
            EXPECT_EQ(y, oracle::quasi_inverse_series(m.algebra(), x));
            Vector diff = x;
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= y[i];
            EXPECT_EQ(multiply(m.algebra(), x, y), diff);
        }
}

TEST(AlgebraProperties, QuasiInverseLawOffNilpotent) {
    RationalSampler s(10);
    const Algebra a = idempotent();
    for (int k = 0; k < 20; ++k) {
        const Vector x = s.vector(1);
        if (x[0] == -1) continue;
        const Vector y = quasi_inverse_neg(a, x);
        EXPECT_EQ(multiply(a, x, y)[0], x[0] - y[0]);
    }
}

TEST(AlgebraProperties, AssociativeImpliesJordan) {
    std::vector<Algebra> algebras{zero_algebra(2), idempotent(), non_jordan()};
    for (const auto& m : nilpotent_catalog()) algebras.push_back(m.algebra());
    for (const auto& a : algebras)
        if (is_associative(a)) {
            EXPECT_TRUE(is_jordan(a));
        }
}

TEST(Transform, RoundTripAndProducts) {
    RationalSampler s(12);
    const Algebra a = builtin("algebras5.7").algebra();
    const Matrix b = s.invertible_matrix(5);
    const Algebra t = transform(a, b);
    EXPECT_EQ(transform(t, mat_inverse(b)), a);
    // b maps new coordinates to old: b(x .' y) = (bx) . (by)
    const Vector x = s.vector(5), y = s.vector(5);
    EXPECT_EQ(b * multiply(t, x, y), multiply(a, b * x, b * y));
}
