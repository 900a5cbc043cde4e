#include "support.hpp"

#include <gtest/gtest.h>

using namespace branchlift;
using namespace testing_support;

TEST(Mu, TailDegreeOrLambda)
{
    const ValidatedBranch plain = unit_branch(12, {18, 20, 23});
    EXPECT_EQ(mu(plain, 2), make_rat(5, 3));
    EXPECT_EQ(mu(plain, 3), make_rat(23, 12));
    const ValidatedBranch tails = branch(6, {{9, Rat(1)}, {15, Rat(2)}, {16, Rat(1)}, {20, Rat(5)}});
    EXPECT_EQ(mu(tails, 1), make_rat(5, 2));
    EXPECT_EQ(mu(tails, 2), make_rat(10, 3));
    EXPECT_THROW(mu(tails, 3), Error);
}

TEST(Polygon, Membership)
{
    const ValidatedBranch vb = unit_branch(12, {18, 20, 23});
    for (std::size_t i = 1; i <= 3; ++i)
    {
        const PolygonDesc pd = make_polygon(vb, i);
        EXPECT_TRUE(polygon_contains(0, pd.e, pd));
        EXPECT_FALSE(polygon_contains(0, pd.e + 1, pd));
        EXPECT_FALSE(polygon_contains(0, pd.e - 1, pd));
    }
    const PolygonDesc p2 = make_polygon(vb, 2);
    EXPECT_TRUE(polygon_contains(9, 0, p2));
    EXPECT_TRUE(polygon_contains(10, 0, p2));
    EXPECT_FALSE(polygon_contains(11, 0, p2));
    EXPECT_FALSE(polygon_contains(-1, 6, p2));
    EXPECT_EQ(p2.vertices(), (std::vector<std::pair<Exp, Exp>>{{0, 6}, {9, 0}, {10, 0}}));
    EXPECT_EQ(make_polygon(vb, 1).vertices(), (std::vector<std::pair<Exp, Exp>>{{0, 2}, {3, 0}}));
}

TEST(Polygon, PullbackIntervalCharacterization)
{
    for (const auto& vb : {unit_branch(12, {18, 20, 23}),
                           branch(6, {{9, Rat(1)}, {15, Rat(2)}, {16, Rat(1)}, {20, Rat(5)}}),
                           unit_branch(30, {36, 45, 50})})
        for (std::size_t i = 1; i <= vb.cd.s(); ++i)
        {
            const PolygonDesc pd = make_polygon(vb, i);
            const Parametrization p = truncation(vb, i);
            const Exp lo = Rat(Rat(pd.e) * Rat(pd.e) * pd.lambda1).get_num().get_si();
            const Exp hi = Rat(Rat(pd.e) * Rat(pd.e) * pd.mu).get_num().get_si();
            for (Exp a = 0; a <= 50; ++a)
                for (Exp b = 0; b <= 50; ++b)
                {
                    UniPoly u = bipoly_compose(BiPoly::monomial(a, b), p.xt, p.yt);
                    const bool inside = u.order().value() >= lo && u.degree().value() <= hi;
                    ASSERT_EQ(polygon_contains(a, b, pd), inside) << "level " << i << " (" << a << "," << b << ")";
                }
        }
}

namespace
{

std::vector<IntVec> naive_slice(const SliceQuery& q)
{
    std::vector<IntVec> out;
    IntVec v(q.sg.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == v.size())
        {
            Exp s = 0, l = 0;
            for (std::size_t j = 0; j < v.size(); ++j)
            {
                s += v[j] * q.sg[j];
                l += v[j] * q.ls[j];
            }
            if (s == q.n && l <= q.bound)
                out.push_back(v);
            return;
        }
        for (Exp x = 0; x * q.sg[c] <= q.n; ++x)
        {
            v[c] = x;
            rec(c + 1);
        }
        v[c] = 0;
    };
    rec(0);
    return out;
}

} // namespace

TEST(Slice, FirstEliminationStep)
{
    SliceQuery q{57, {6, 9, 19}, {6, 10, 19}, 60};
    EXPECT_EQ(lattice_slice(q, IntVec{0, 0, 3}), (std::vector<IntVec>{{5, 3, 0}, {8, 1, 0}}));
    EXPECT_EQ(lattice_slice(q), (std::vector<IntVec>{{0, 0, 3}, {5, 3, 0}, {8, 1, 0}}));
    EXPECT_EQ(lattice_slice(q), naive_slice(q));
}

TEST(Slice, EdgeCases)
{
    EXPECT_EQ(lattice_slice({0, {6, 9, 19}, {6, 10, 19}, 60}), (std::vector<IntVec>{{0, 0, 0}}));
    EXPECT_TRUE(lattice_slice({1, {6, 9, 19}, {6, 10, 19}, 60}).empty());
    EXPECT_TRUE(lattice_slice({-3, {2, 3}, {2, 3}, 10}).empty());
    EXPECT_THROW(lattice_slice({5, {2, 0}, {2, 3}, 10}), Error);
    EXPECT_THROW(lattice_slice({5, {2, 3}, {2}, 10}), Error);
}

TEST(Slice, MatchesNaiveEnumerationRandom)
{
    std::mt19937 rng(21);
    std::uniform_int_distribution<Exp> dim(1, 4), w(1, 15), extra(0, 5), n(0, 90), bound(10, 80);
    for (int trial = 0; trial < 200; ++trial)
    {
        SliceQuery q;
        const Exp d = dim(rng);
        for (Exp c = 0; c < d; ++c)
        {
            q.sg.push_back(w(rng));
            q.ls.push_back(q.sg.back() + extra(rng));
        }
        q.n = n(rng);
        q.bound = bound(rng);
        ASSERT_EQ(lattice_slice(q), naive_slice(q)) << "trial " << trial;
    }
}
