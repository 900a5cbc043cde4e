#include "support.hpp"

#include <gtest/gtest.h>

using namespace branchlift;
using namespace testing_support;

TEST(Oracle, Cusp)
{
    Parametrization p{1, 2, UniPoly::monomial(2), UniPoly::monomial(3)};
    OracleResult r = resultant_implicitize(p);
    EXPECT_EQ(r.g, bp({{0, 2, 1}, {3, 0, -1}}));
    EXPECT_TRUE(r.unit == 1 || r.unit == -1);
}

TEST(Oracle, SecondLevel)
{
    const ValidatedBranch vb = unit_branch(12, {18, 20, 23});
    const BiPoly f1 = bp({{0, 2, 1}, {3, 0, -1}});
    OracleResult r = resultant_implicitize(truncation(vb, 2));
    EXPECT_EQ(r.g, pow(f1, 3) + bp({{5, 3, -2}, {8, 1, -6}, {10, 0, 1}}));
}

TEST(Oracle, AgreesWithLiftOnTails)
{
    const ValidatedBranch vb = branch(6, {{9, Rat(1)}, {15, Rat(2)}, {16, Rat(1)}, {20, Rat(5)}});
    const std::vector<BiPoly> f0{BiPoly::y()};
    const BiPoly b1 = lift(f0, vb, 1).f;
    EXPECT_EQ(resultant_implicitize(truncation(vb, 1)).g, b1);
    const std::vector<BiPoly> fs{BiPoly::y(), b1};
    const BiPoly b2 = lift(fs, vb, 2).f;
    OracleResult r = resultant_implicitize(truncation(vb, 2));
    EXPECT_EQ(r.g.deg_y(), Order(6));
    EXPECT_EQ(r.g, b2);
}

TEST(Oracle, Bound)
{
    const ValidatedBranch vb = unit_branch(30, {36, 45, 50});
    EXPECT_THROW(resultant_implicitize(truncation(vb, 3)), Error);
    EXPECT_NO_THROW(resultant_implicitize(truncation(vb, 2)));
    EXPECT_THROW(resultant_implicitize(truncation(vb, 2), 8), Error);
}

TEST(Oracle, SylvesterShape)
{
    std::vector<BiPoly> a{BiPoly::x(), BiPoly(), BiPoly::constant(Rat(1))};
    std::vector<BiPoly> b{BiPoly::y(), BiPoly(), BiPoly(), BiPoly::constant(Rat(1))};
    BiMatrix s = sylvester_matrix(a, b);
    ASSERT_EQ(s.size(), 5u);
    for (const auto& row : s)
        EXPECT_EQ(row.size(), 5u);
}
