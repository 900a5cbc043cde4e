#ifndef BRANCHLIFT_TESTS_SUPPORT_HPP
#define BRANCHLIFT_TESTS_SUPPORT_HPP

#include <branchlift/branchlift.hpp>

#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace testing_support
{

using namespace branchlift;

inline ValidatedBranch branch(Exp k, std::vector<std::pair<Exp, Rat>> terms, bool lenient = false)
{
    BranchInput b;
    b.k = k;
    for (auto& [e, c] : terms)
        b.terms.emplace(e, c);
    return validate_branch(b, lenient);
}

inline ValidatedBranch unit_branch(Exp k, std::vector<Exp> exps)
{
    std::vector<std::pair<Exp, Rat>> t;
    for (Exp e : exps)
        t.emplace_back(e, Rat(1));
    return branch(k, t);
}

inline BiPoly bp(std::vector<std::tuple<Exp, Exp, long>> terms)
{
    BiPoly f;
    for (auto [a, b, c] : terms)
        f.add_term(a, b, Rat(c));
    return f;
}

inline Rat random_rat(std::mt19937& rng, int mag = 5)
{
    std::uniform_int_distribution<int> num(-mag, mag);
    std::uniform_int_distribution<int> den(1, 3);
    int n = 0;
    while (n == 0)
        n = num(rng);
    return make_rat(n, den(rng));
}

inline UniPoly random_uni(std::mt19937& rng, int max_deg, int max_terms)
{
    std::uniform_int_distribution<int> deg(0, max_deg), cnt(0, max_terms);
    UniPoly p;
    for (int j = cnt(rng); j > 0; --j)
        p.add_term(deg(rng), random_rat(rng));
    return p;
}

inline BiPoly random_bi(std::mt19937& rng, int max_x, int max_y, int max_terms)
{
    std::uniform_int_distribution<int> dx(0, max_x), dy(0, max_y), cnt(0, max_terms);
    BiPoly p;
    for (int j = cnt(rng); j > 0; --j)
        p.add_term(dx(rng), dy(rng), random_rat(rng));
    return p;
}

//------------------------------------------------------------------------------
// Dense reference arithmetic

using Dense1 = std::vector<Rat>;
using Dense2 = std::vector<std::vector<Rat>>; // [x][y]

inline Dense1 dense(const UniPoly& p, std::size_t size)
{
    Dense1 d(size, Rat(0));
    for (const auto& [e, c] : p.terms())
        d.at(static_cast<std::size_t>(e)) = c;
    return d;
}

inline Dense1 dense_mul(const Dense1& a, const Dense1& b)
{
    Dense1 r(a.size() + b.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

inline UniPoly from_dense(const Dense1& d)
{
    UniPoly p;
    for (std::size_t i = 0; i < d.size(); ++i)
        p.add_term(static_cast<Exp>(i), d[i]);
    return p;
}

inline Dense2 dense2(const BiPoly& p, std::size_t nx, std::size_t ny)
{
    Dense2 d(nx, std::vector<Rat>(ny, Rat(0)));
    for (const auto& [m, c] : p.terms())
        d.at(static_cast<std::size_t>(m.x)).at(static_cast<std::size_t>(m.y)) = c;
    return d;
}

inline Dense2 dense2_mul(const Dense2& a, const Dense2& b)
{
    const std::size_t ny = a[0].size() + b[0].size();
    Dense2 r(a.size() + b.size(), std::vector<Rat>(ny, Rat(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != 0)
                for (std::size_t k = 0; k < b.size(); ++k)
                    for (std::size_t l = 0; l < b[k].size(); ++l)
                        r[i + k][j + l] += a[i][j] * b[k][l];
    return r;
}

inline BiPoly from_dense2(const Dense2& d)
{
    BiPoly p;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j)
            p.add_term(static_cast<Exp>(i), static_cast<Exp>(j), d[i][j]);
    return p;
}

/// f(xt, yt) term by term with repeated dense multiplication.
inline UniPoly naive_compose(const BiPoly& f, const UniPoly& xt, const UniPoly& yt)
{
    UniPoly out;
    for (const auto& [m, c] : f.terms())
    {
        Dense1 acc{Rat(1)};
        for (Exp a = 0; a < m.x; ++a)
            acc = dense_mul(acc, dense(xt, static_cast<std::size_t>(xt.degree().value()) + 1));
        for (Exp b = 0; b < m.y; ++b)
            acc = dense_mul(acc, dense(yt, static_cast<std::size_t>(yt.degree().value()) + 1));
        out += from_dense(acc).scaled(c);
    }
    return out;
}

//------------------------------------------------------------------------------
// Brute-force semigroup: every sum of generators up to `limit`.
inline std::set<Exp> semigroup_upto(const std::vector<Exp>& gens, Exp limit)
{
    std::vector<bool> in(static_cast<std::size_t>(limit) + 1, false);
    in[0] = true;
    for (Exp v = 1; v <= limit; ++v)
        for (Exp g : gens)
            if (g <= v && in[static_cast<std::size_t>(v - g)])
            {
                in[static_cast<std::size_t>(v)] = true;
                break;
            }
    std::set<Exp> out;
    for (Exp v = 0; v <= limit; ++v)
        if (in[static_cast<std::size_t>(v)])
            out.insert(v);
    return out;
}

} // namespace testing_support

#endif // BRANCHLIFT_TESTS_SUPPORT_HPP
