#include <gtest/gtest.h>

#include "support.hpp"

using namespace splinedim;
using sdtest::Gen;

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-13/4"), rat(-13, 4));
    EXPECT_EQ(parse_rational("6/8"), rat(3, 4));
    EXPECT_EQ(to_string(parse_rational("6/8")), "3/4");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/0", "abc", "1.5", "1//2", "/3", "2/", " 1"})
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, Binomials) {
    EXPECT_EQ(binom(7, 2), 21);
    EXPECT_EQ(binom(2, 2), 1);
    EXPECT_EQ(binom(1, 2), 0);
    EXPECT_EQ(binomial(40, 20), Integer("137846528820"));
}

TEST(Matrix, RankOfSmallExamples) {
    EXPECT_EQ(mat_rank(RatMatrix{{1, 2}, {2, 4}}), 1u);
    EXPECT_EQ(mat_rank(RatMatrix{{1, 2}, {3, 4}}), 2u);
    EXPECT_EQ(mat_rank(RatMatrix(3, 4)), 0u);
    EXPECT_EQ(mat_rank(RatMatrix{{rat(1, 2), rat(1, 3)}, {rat(3, 2), 1}}), 1u);
}

TEST(Matrix, RankAgreesWithNaiveElimination) {
    Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = static_cast<std::size_t>(g.integer(1, 8));
        auto c = static_cast<std::size_t>(g.integer(1, 8));
        RatMatrix m = g.matrix(r, c, static_cast<int>(g.integer(0, 80)));
        EXPECT_EQ(mat_rank(m), sdtest::naive_rank(m));
    }
}

TEST(Matrix, PrescribedRankIsRecovered) {
    Gen g(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto r = static_cast<std::size_t>(g.integer(1, 9));
        auto c = static_cast<std::size_t>(g.integer(1, 9));
        auto k = static_cast<std::size_t>(g.integer(0, static_cast<long>(std::min(r, c))));
        // A random product has full inner rank with overwhelming probability;
        // the naive oracle settles it either way.
        RatMatrix m = g.matrix_of_rank(r, c, k);
        EXPECT_LE(mat_rank(m), k);
        EXPECT_EQ(mat_rank(m), sdtest::naive_rank(m));
    }
}

TEST(Matrix, RankPlusNullityEqualsColumns) {
    Gen g(23);
    for (int trial = 0; trial < 150; ++trial) {
        auto r = static_cast<std::size_t>(g.integer(1, 7));
        auto c = static_cast<std::size_t>(g.integer(1, 9));
        RatMatrix m = g.matrix_of_rank(r, c, static_cast<std::size_t>(g.integer(0, 4)));
        auto ns = mat_nullspace(m);
        EXPECT_EQ(mat_rank(m) + ns.size(), c);
        for (const auto& v : ns) {
            for (const auto& x : mat_apply(m, v)) EXPECT_EQ(x, 0);
        }
        // Nullspace vectors are independent.
        if (!ns.empty()) {
            RatMatrix n(ns.size(), c);
            for (std::size_t i = 0; i < ns.size(); ++i)
                for (std::size_t j = 0; j < c; ++j) n(i, j) = ns[i][j];
            EXPECT_EQ(mat_rank(n), ns.size());
        }
    }
}

TEST(Matrix, RrefPivotsMatchRank) {
    Gen g(8);
    for (int trial = 0; trial < 60; ++trial) {
        RatMatrix m = g.matrix(5, 6, 40);
        RatMatrix a = m;
        auto piv = rref_in_place(a);
        EXPECT_EQ(piv.size(), mat_rank(m));
        for (std::size_t i = 0; i < piv.size(); ++i) {
            EXPECT_EQ(a(i, piv[i]), 1);
            for (std::size_t r = 0; r < a.rows(); ++r)
                if (r != i) EXPECT_EQ(a(r, piv[i]), 0);
        }
    }
}

TEST(Matrix, HstackConcatenatesColumns) {
    RatMatrix a{{1}, {2}}, b{{3, 4}, {5, 6}};
    RatMatrix h = hstack({a, b});
    EXPECT_EQ(h, (RatMatrix{{1, 3, 4}, {2, 5, 6}}));
}

TEST(Poly2, MonomialIndexingIsGraded) {
    auto ms = monomials_upto(3);
    ASSERT_EQ(ms.size(), monomial_count(3));
    for (std::size_t i = 0; i < ms.size(); ++i) EXPECT_EQ(monomial_index(ms[i]), i);
    EXPECT_EQ(ms[0], (Monomial{0, 0}));
    EXPECT_EQ(ms[1], (Monomial{1, 0}));
    EXPECT_EQ(ms[2], (Monomial{0, 1}));
}

TEST(Poly2, ArithmeticAndEvaluation) {
    Poly2 x = Poly2::x(), y = Poly2::y();
    Poly2 p = (x + y).pow(2);
    EXPECT_EQ(p.coeff({1, 1}), 2);
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.eval(rat(1, 2), 3), rat(49, 4));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p - p).degree(), -1);
}

TEST(Poly2, HomogeneousComponentsSumToPolynomial) {
    Gen g(3);
    for (int trial = 0; trial < 50; ++trial) {
        Poly2 p = g.poly(static_cast<int>(g.integer(0, 6)));
        Poly2 sum;
        for (int k = 0; k <= std::max(p.degree(), 0); ++k) {
            Poly2 h = homogeneous_component(p, k);
            for (const auto& [m, c] : h.terms()) EXPECT_EQ(m.degree(), k);
            sum += h;
        }
        EXPECT_EQ(sum, p);
    }
}

TEST(Poly2, AffineSubstitutionRoundTrips) {
    Gen g(17);
    for (int trial = 0; trial < 40; ++trial) {
        Poly2 p = g.poly(static_cast<int>(g.integer(0, 5)));
        AffineMap m = g.invertible_map();
        Poly2 q = substitute_affine(p, m);
        EXPECT_EQ(q.degree(), p.degree());
        EXPECT_EQ(substitute_affine(q, m.inverse()), p);
        Rational x = g.rational(), y = g.rational();
        auto [mx, my] = m.apply(x, y);
        EXPECT_EQ(q.eval(x, y), p.eval(mx, my));
    }
}

TEST(Poly2, SingularSubstitutionThrows) {
    AffineMap m{1, 2, 2, 4, 0, 0};
    EXPECT_THROW(substitute_affine(Poly2::x(), m), SingularMap);
    EXPECT_THROW(m.inverse(), SingularMap);
}

TEST(LinForm, CanonicalForm) {
    LinForm a(rat(-2, 3), rat(4, 3), 2);
    EXPECT_EQ(a.alpha(), 1);
    EXPECT_EQ(a.beta(), -2);
    EXPECT_EQ(a.gamma0(), -3);
    EXPECT_EQ(a, LinForm(2, -4, -6));
    EXPECT_THROW(LinForm(0, 0, 1), DegenerateInput);
    auto l = LinForm::through({0, 0}, {0, 5});
    EXPECT_EQ(l.direction(), (DirectionKey{1, 0}));
    EXPECT_EQ(l({0, 7}), 0);
}

TEST(LinForm, ConcurrencyPredicate) {
    LinForm l1(1, 0, 0), l2(0, 1, 0), l3(1, 1, 0), l4(1, 1, -1), l5(1, 0, -1);
    EXPECT_TRUE(lines_concurrent(l1, l2, l3));
    EXPECT_FALSE(lines_concurrent(l1, l2, l4));
    EXPECT_FALSE(lines_concurrent(l1, l5, l2)); // parallel pair
    EXPECT_THROW(lines_concurrent(l1, l1, l2), DegenerateInput);
}
