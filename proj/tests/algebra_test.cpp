#include "support.hpp"

#include <gtest/gtest.h>

using namespace branchlift;
using namespace testing_support;

TEST(Rational, ParsesAndCanonicalizes)
{
    EXPECT_EQ(parse_rat("3/6"), make_rat(1, 2));
    EXPECT_EQ(parse_rat("-2"), Rat(-2));
    EXPECT_EQ(parse_rat(" +7/3 "), make_rat(7, 3));
    EXPECT_EQ(to_string(parse_rat("-4/6")), "-2/3");
    EXPECT_THROW(parse_rat("1/0"), Error);
    EXPECT_THROW(parse_rat("abc"), Error);
    EXPECT_THROW(parse_rat("1/-2"), Error);
    EXPECT_THROW(parse_rat(""), Error);
}

TEST(Order, InfinityArithmetic)
{
    const Order inf = Order::infinity();
    EXPECT_TRUE(inf.is_infinite());
    EXPECT_EQ(inf + Order(3), inf);
    EXPECT_EQ(Order(2) + Order(3), Order(5));
    EXPECT_LT(Order(100), inf);
    EXPECT_EQ(to_string(inf), "+inf");
    EXPECT_THROW(inf.value(), Error);
}

TEST(UniPoly, OrderAndDegree)
{
    UniPoly p = UniPoly::monomial(3) + UniPoly::monomial(5, Rat(2));
    EXPECT_EQ(uni_order(p), Order(3));
    EXPECT_EQ(p.degree(), Order(5));
    EXPECT_EQ(uni_order(UniPoly()), Order::infinity());
    EXPECT_EQ((p - p).size(), 0u);
}

TEST(UniPoly, ProductMatchesDenseConvolution)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial)
    {
        UniPoly a = random_uni(rng, 12, 6), b = random_uni(rng, 12, 6);
        EXPECT_EQ(a * b, from_dense(dense_mul(dense(a, 13), dense(b, 13))));
    }
}

TEST(BiPoly, ProductMatchesDenseConvolution)
{
    std::mt19937 rng(12);
    for (int trial = 0; trial < 100; ++trial)
    {
        BiPoly a = random_bi(rng, 6, 5, 6), b = random_bi(rng, 6, 5, 6);
        EXPECT_EQ(a * b, from_dense2(dense2_mul(dense2(a, 7, 6), dense2(b, 7, 6))));
    }
}

TEST(BiPoly, PrintsInFixedOrder)
{
    EXPECT_EQ(bp({{0, 2, 1}, {3, 0, -1}}).to_string(), "y^2 - x^3");
    EXPECT_EQ(bp({{5, 3, -2}, {8, 1, -6}, {10, 0, 1}}).to_string(), "-2*y^3*x^5 - 6*y*x^8 + x^10");
    BiPoly h;
    h.add_term(1, 1, make_rat(-1, 2));
    h.add_term(0, 0, Rat(3));
    EXPECT_EQ(h.to_string(), "-1/2*y*x + 3");
    EXPECT_EQ(BiPoly().to_string(), "0");
}

TEST(BiPoly, DerivativeInY)
{
    BiPoly f = bp({{0, 3, 1}, {2, 1, 4}, {5, 0, 7}});
    EXPECT_EQ(f.d_dy(), bp({{0, 2, 3}, {2, 0, 4}}));
    EXPECT_EQ(f.deg_y(), Order(3));
    EXPECT_EQ(f.deg_x(), Order(5));
    EXPECT_EQ(BiPoly().deg_y(), Order::infinity());
}

TEST(Compose, CuspVanishes)
{
    BiPoly f1 = bp({{0, 2, 1}, {3, 0, -1}});
    EXPECT_TRUE(bipoly_compose(f1, UniPoly::monomial(2), UniPoly::monomial(3)).is_zero());
}

TEST(Compose, ProjectionAndHandExpansion)
{
    UniPoly yt = UniPoly::monomial(9) + UniPoly::monomial(10);
    EXPECT_EQ(bipoly_compose(BiPoly::x(), UniPoly::monomial(6), yt), UniPoly::monomial(6));
    BiPoly f1 = bp({{0, 2, 1}, {3, 0, -1}});
    UniPoly r = bipoly_compose(f1, UniPoly::monomial(6), yt);
    EXPECT_EQ(r, UniPoly::monomial(19, Rat(2)) + UniPoly::monomial(20));
    EXPECT_EQ(uni_order(r), Order(19));
}

TEST(Compose, MatchesNaiveExpansion)
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial)
    {
        BiPoly f = random_bi(rng, 4, 4, 5);
        UniPoly xt = random_uni(rng, 4, 2) + UniPoly::monomial(5);
        UniPoly yt = random_uni(rng, 5, 3);
        if (yt.is_zero())
            yt = UniPoly::monomial(2);
        EXPECT_EQ(bipoly_compose(f, xt, yt), naive_compose(f, xt, yt));
        UniPoly xm = UniPoly::monomial(3, random_rat(rng));
        EXPECT_EQ(bipoly_compose(f, xm, yt), naive_compose(f, xm, yt));
    }
}

TEST(ExactQuotient, RecoversFactor)
{
    std::mt19937 rng(14);
    for (int trial = 0; trial < 60; ++trial)
    {
        BiPoly a = random_bi(rng, 4, 4, 5), b = random_bi(rng, 3, 3, 4);
        if (b.is_zero())
            continue;
        EXPECT_EQ(exact_quotient(a * b, b), a);
    }
    EXPECT_THROW(exact_quotient(BiPoly::x() + BiPoly::constant(Rat(1)), BiPoly::y()), Error);
    EXPECT_THROW(exact_quotient(BiPoly::x(), BiPoly()), Error);
}

namespace
{

BiPoly laplace(const BiMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    BiPoly det;
    for (std::size_t c = 0; c < n; ++c)
    {
        if (m[0][c].is_zero())
            continue;
        BiMatrix minor;
        for (std::size_t r = 1; r < n; ++r)
        {
            std::vector<BiPoly> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c)
                    row.push_back(m[r][cc]);
            minor.push_back(row);
        }
        BiPoly term = m[0][c] * laplace(minor);
        det += c % 2 == 0 ? term : term.scaled(Rat(-1));
    }
    return det;
}

} // namespace

TEST(Bareiss, SmallCases)
{
    EXPECT_EQ(sylvester_det({{BiPoly::y() - BiPoly::x()}}), BiPoly::y() - BiPoly::x());
    BiPoly a = BiPoly::x(), b = BiPoly::y(), c = BiPoly::constant(Rat(3)), d = BiPoly::x() * BiPoly::y();
    EXPECT_EQ(sylvester_det({{a, b}, {c, d}}), a * d - b * c);
    // zero leading pivot forces a row swap
    EXPECT_EQ(sylvester_det({{BiPoly(), b}, {c, d}}), (b * c).scaled(Rat(-1)));
}

TEST(Bareiss, MatchesCofactorExpansion)
{
    std::mt19937 rng(15);
    for (int trial = 0; trial < 40; ++trial)
    {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        BiMatrix m(n, std::vector<BiPoly>(n));
        for (auto& row : m)
            for (auto& e : row)
                e = random_bi(rng, 2, 2, 2);
        EXPECT_EQ(sylvester_det(m), laplace(m));
    }
}

TEST(Bareiss, CuspResultant)
{
    // rows of the Sylvester matrix of x - t^2 and y - t^3 in t
    const BiPoly one = BiPoly::constant(Rat(1)), z;
    const BiPoly mx = BiPoly::x().scaled(Rat(-1)), my = BiPoly::y().scaled(Rat(-1));
    BiMatrix s{{one, z, mx, z, z},
               {z, one, z, mx, z},
               {z, z, one, z, mx},
               {one, z, z, my, z},
               {z, one, z, z, my}};
    BiPoly det = sylvester_det(s);
    BiPoly cusp = bp({{0, 2, 1}, {3, 0, -1}});
    EXPECT_TRUE(det == cusp || det == cusp.scaled(Rat(-1))) << det;
    EXPECT_EQ(det, laplace(s));
}
