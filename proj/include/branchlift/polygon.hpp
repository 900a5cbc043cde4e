#ifndef BRANCHLIFT_POLYGON_HPP
#define BRANCHLIFT_POLYGON_HPP

// The support polygon N_i of the level-i equation and the integer points
// of the hyperplane slices scanned by the elimination loop.

#include <branchlift/parametrize.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace branchlift
{

/// mu_i = deg(phi_i) / k, or lambda_i when phi_i = 0.
inline Rat mu(const ValidatedBranch& vb, std::size_t i)
{
    if (i < 1 || i > vb.cd.s())
        throw Error(Errc::IndexOutOfRange, "polygon level " + std::to_string(i));
    const UniPoly& tail = vb.tail(i);
    if (tail.is_zero())
        return vb.cd.lambda(i);
    return make_rat(tail.degree().value(), vb.cd.k);
}

/// Half-plane a*alpha + b*beta (>= or <=) c with integer data.
struct Inequality
{
    Exp a = 0;
    Exp b = 0;
    Exp c = 0;
};

/// conv{(0,e_i), (e_i lambda_1, 0), (e_i mu_i, 0)} intersected with Z^2:
///   k_1 alpha + (k_1 lambda_1) beta >= e_i (k_1 lambda_1)
///   e_i alpha + (e_i mu_i) beta     <= e_i (e_i mu_i)
struct PolygonDesc
{
    std::size_t level = 0;
    Exp e = 1;
    Rat lambda1;
    Rat mu;
    Inequality lower; ///< satisfied with >=
    Inequality upper; ///< satisfied with <=

    std::vector<std::pair<Exp, Exp>> vertices() const
    {
        std::vector<std::pair<Exp, Exp>> v{{0, e}, {Rat(lambda1 * Rat(e)).get_num().get_si(), 0}};
        Exp far = Rat(mu * Rat(e)).get_num().get_si();
        if (far != v[1].first)
            v.emplace_back(far, 0);
        return v;
    }
};

inline PolygonDesc make_polygon(const ValidatedBranch& vb, std::size_t i)
{
    const CharData& cd = vb.cd;
    PolygonDesc pd;
    pd.level = i;
    pd.e = cd.e(i);
    pd.lambda1 = cd.lambda(1);
    pd.mu = mu(vb, i);
    const Exp k1 = cd.k_at(1);
    const Exp k1l1 = Rat(pd.lambda1 * Rat(k1)).get_num().get_si();
    Rat emu = pd.mu * Rat(pd.e);
    if (!is_integer(emu))
        throw Error(Errc::NonIntegralExponent, "e_i * mu_i is not integral");
    const Exp emu_int = emu.get_num().get_si();
    pd.lower = {k1, k1l1, pd.e * k1l1};
    pd.upper = {pd.e, emu_int, pd.e * emu_int};
    return pd;
}

inline bool polygon_contains(Exp alpha, Exp beta, const PolygonDesc& pd)
{
    if (alpha < 0 || beta < 0)
        return false;
    return pd.lower.a * alpha + pd.lower.b * beta >= pd.lower.c &&
           pd.upper.a * alpha + pd.upper.b * beta <= pd.upper.c;
}

inline bool support_in_polygon(const BiPoly& f, const PolygonDesc& pd)
{
    for (const auto& [m, c] : f.terms())
        if (!polygon_contains(m.x, m.y, pd))
            return false;
    return true;
}

//------------------------------------------------------------------------------
/// Non-negative integer VE with VE.sg == n and VE.ls <= bound.
struct SliceQuery
{
    Exp n = 0;
    IntVec sg;
    IntVec ls;
    Exp bound = 0;
};

namespace detail
{

struct SliceSearch
{
    const SliceQuery& q;
    std::vector<std::size_t> order; ///< coordinates, largest sg first
    std::vector<Exp> suffix_gcd;    ///< gcd of sg over order[d..]
    IntVec current;
    std::vector<IntVec> out;

    void run(std::size_t depth, Exp remaining, Exp load)
    {
        if (depth == order.size())
        {
            if (remaining == 0)
                out.push_back(current);
            return;
        }
        if (remaining % suffix_gcd[depth] != 0)
            return;
        const std::size_t c = order[depth];
        const Exp w = q.sg[c];
        const Exp l = q.ls[c];
        if (depth + 1 == order.size())
        {
            const Exp v = remaining / w;
            if (load + v * l <= q.bound)
            {
                current[c] = v;
                out.push_back(current);
                current[c] = 0;
            }
            return;
        }
        for (Exp v = 0; v * w <= remaining && load + v * l <= q.bound; ++v)
        {
            current[c] = v;
            run(depth + 1, remaining - v * w, load + v * l);
        }
        current[c] = 0;
    }
};

} // namespace detail

/// Every solution, lexicographically sorted, without `exclude`.
inline std::vector<IntVec> lattice_slice(const SliceQuery& q, const std::optional<IntVec>& exclude = std::nullopt)
{
    const std::size_t dim = q.sg.size();
    if (q.ls.size() != dim)
        throw Error(Errc::IndexOutOfRange, "slice query dimension mismatch");
    for (std::size_t c = 0; c < dim; ++c)
        if (q.sg[c] <= 0 || q.ls[c] <= 0)
            throw Error(Errc::IndexOutOfRange, "slice query entries must be positive");
    if (q.n < 0)
        return {};

    detail::SliceSearch search{q, {}, {}, IntVec(dim, 0), {}};
    search.order.resize(dim);
    std::iota(search.order.begin(), search.order.end(), std::size_t{0});
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](std::size_t a, std::size_t b) { return q.sg[a] > q.sg[b]; });
    search.suffix_gcd.assign(dim + 1, 0);
    for (std::size_t d = dim; d-- > 0;)
        search.suffix_gcd[d] = std::gcd(search.suffix_gcd[d + 1], q.sg[search.order[d]]);
    if (dim == 0)
    {
        if (q.n == 0)
            search.out.push_back({});
    }
    else
        search.run(0, q.n, 0);

    std::sort(search.out.begin(), search.out.end());
    if (exclude)
        std::erase(search.out, *exclude);
    return std::move(search.out);
}

} // namespace branchlift

#endif // BRANCHLIFT_POLYGON_HPP
