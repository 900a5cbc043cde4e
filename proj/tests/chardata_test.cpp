#include "support.hpp"

#include <gtest/gtest.h>

using namespace branchlift;
using namespace testing_support;

namespace
{

Errc code_of(const std::function<void()>& f)
{
    try
    {
        f();
    }
    catch (const Error& e)
    {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::ParseError;
}

BranchInput input(Exp k, std::vector<std::pair<Exp, long>> t, std::map<Exp, std::size_t> levels = {})
{
    BranchInput b;
    b.k = k;
    for (auto [e, c] : t)
        b.terms.emplace(e, Rat(c));
    b.declared_levels = std::move(levels);
    return b;
}

} // namespace

TEST(Characteristics, ThreeExponents)
{
    CharData cd = extract_characteristics(12, {18, 20, 23});
    EXPECT_EQ(cd.lambdas, (std::vector<Rat>{make_rat(3, 2), make_rat(5, 3), make_rat(23, 12)}));
    EXPECT_EQ(cd.ks, (std::vector<Exp>{2, 3, 2}));
    EXPECT_EQ(cd.es, (std::vector<Exp>{1, 2, 6, 12}));
    EXPECT_EQ(cd.char_exponent(3), 23);
}

TEST(Characteristics, SmallCases)
{
    CharData cusp = extract_characteristics(2, {3});
    EXPECT_EQ(cusp.lambdas, (std::vector<Rat>{make_rat(3, 2)}));
    EXPECT_EQ(cusp.es, (std::vector<Exp>{1, 2}));

    CharData c689 = extract_characteristics(6, {8, 9});
    EXPECT_EQ(c689.lambdas, (std::vector<Rat>{make_rat(4, 3), make_rat(3, 2)}));
    EXPECT_EQ(c689.ks, (std::vector<Exp>{3, 2}));

    CharData tails = extract_characteristics(6, {9, 15, 16, 20});
    EXPECT_EQ(tails.lambdas, (std::vector<Rat>{make_rat(3, 2), make_rat(8, 3)}));
    EXPECT_EQ(tails.ks, (std::vector<Exp>{2, 3}));
}

TEST(Characteristics, Errors)
{
    EXPECT_EQ(code_of([] { extract_characteristics(4, {6}); }), Errc::NonPrimitive);
    EXPECT_EQ(code_of([] { extract_characteristics(4, {}); }), Errc::EmptySupport);
    EXPECT_EQ(code_of([] { extract_characteristics(0, {1}); }), Errc::NonPrimitive);
}

TEST(Lattice, Membership)
{
    CharData cd = extract_characteristics(12, {18, 20, 23});
    EXPECT_FALSE(in_lattice(make_rat(5, 3), 1, cd));
    EXPECT_TRUE(in_lattice(make_rat(5, 3), 2, cd));
    EXPECT_TRUE(in_lattice(Rat(7), 0, cd));
    EXPECT_TRUE(in_lattice(Rat(7), 3, cd));
    CharData two = extract_characteristics(6, {9, 15, 16, 20});
    EXPECT_TRUE(in_lattice(make_rat(10, 3), 2, two));
    EXPECT_FALSE(in_lattice(make_rat(10, 3), 1, two));
    EXPECT_EQ(code_of([&] { in_lattice(Rat(1), 4, cd); }), Errc::IndexOutOfRange);
}

TEST(Validate, SplitsTermsByLevel)
{
    ValidatedBranch v = validate_branch(input(6, {{9, 1}, {10, 1}}));
    EXPECT_EQ(v.cd.lambdas, (std::vector<Rat>{make_rat(3, 2), make_rat(5, 3)}));
    EXPECT_EQ(v.c, (std::vector<Rat>{Rat(1), Rat(1)}));
    EXPECT_TRUE(v.tail(1).is_zero());
    EXPECT_TRUE(v.tail(2).is_zero());

    ValidatedBranch t = validate_branch(input(6, {{9, 1}, {15, 2}, {16, 1}, {20, 5}}));
    EXPECT_EQ(t.tail(1), UniPoly::monomial(15, Rat(2)));
    EXPECT_EQ(t.tail(2), UniPoly::monomial(20, Rat(5)));
    EXPECT_TRUE(t.warnings.empty());
}

TEST(Validate, InputErrors)
{
    EXPECT_EQ(code_of([] { validate_branch(input(4, {{6, 1}, {8, 1}})); }), Errc::IntegerExponentPresent);
    EXPECT_EQ(code_of([] { validate_branch(input(4, {})); }), Errc::EmptySupport);
    EXPECT_EQ(code_of([] { validate_branch(input(4, {{6, 1}})); }), Errc::NonPrimitive);
    EXPECT_EQ(code_of([] { validate_branch(input(4, {{6, 0}, {7, 1}})); }), Errc::ParseError);
}

TEST(Validate, DeclaredLevels)
{
    // t^10 is the second characteristic term
    EXPECT_EQ(code_of([] { validate_branch(input(6, {{9, 1}, {10, 1}}, {{10, 1}})); }),
              Errc::TailOrderViolation);
    EXPECT_EQ(code_of([] { validate_branch(input(6, {{9, 1}, {16, 1}, {20, 1}}, {{20, 1}})); }),
              Errc::TailOutsideLattice);
    // 15 does not exceed k*lambda_2 = 16
    EXPECT_EQ(code_of([] { validate_branch(input(6, {{9, 1}, {15, 1}, {16, 1}}, {{15, 2}})); }),
              Errc::TailOrderViolation);
    // 21 in M_1 but past k*lambda_2 = 16: phi_1 overruns
    EXPECT_EQ(code_of([] { validate_branch(input(6, {{9, 1}, {16, 1}, {21, 1}}, {{21, 1}})); }),
              Errc::TailOrderViolation);
    ValidatedBranch lenient = validate_branch(input(6, {{9, 1}, {16, 1}, {21, 1}}, {{21, 1}}), true);
    EXPECT_EQ(lenient.warnings.size(), 1u);
    EXPECT_TRUE(lenient.tail(1).is_zero());
    EXPECT_EQ(lenient.tail(2), UniPoly::monomial(21));
    // consistent declarations are accepted
    ValidatedBranch ok = validate_branch(input(6, {{9, 1}, {15, 2}, {16, 1}, {20, 5}}, {{15, 1}, {20, 2}}));
    EXPECT_EQ(ok.tail(1), UniPoly::monomial(15, Rat(2)));
    EXPECT_EQ(code_of([] { validate_branch(input(6, {{9, 1}, {16, 1}}, {{16, 1}})); }),
              Errc::TailOrderViolation);
    EXPECT_EQ(code_of([] { validate_branch(input(6, {{9, 1}, {15, 1}, {16, 1}}, {{15, 3}})); }),
              Errc::IndexOutOfRange);
}
