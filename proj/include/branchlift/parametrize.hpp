#ifndef BRANCHLIFT_PARAMETRIZE_HPP
#define BRANCHLIFT_PARAMETRIZE_HPP

#include <branchlift/semigroup.hpp>

#include <algorithm>
#include <span>
#include <vector>

namespace branchlift
{

/// Truncated parametrization iota_i: x = t^{e_i}, y = yt(t).
struct Parametrization
{
    std::size_t level = 0;
    Exp e = 1;
    UniPoly xt;
    UniPoly yt;
};

/// Keeps the characteristic levels 1..i of the branch and rescales t -> t^{e_i/k}.
inline Parametrization truncation(const ValidatedBranch& vb, std::size_t i)
{
    const CharData& cd = vb.cd;
    if (i < 1 || i > cd.s())
        throw Error(Errc::IndexOutOfRange, "truncation level " + std::to_string(i));
    Parametrization p;
    p.level = i;
    p.e = cd.e(i);
    p.xt = UniPoly::monomial(p.e);
    auto rescale = [&](Exp m) {
        if ((m * p.e) % cd.k != 0)
            throw Error(Errc::NonIntegralExponent, "t^" + std::to_string(m) + " does not rescale to level " +
                                                       std::to_string(i));
        return m * p.e / cd.k;
    };
    for (std::size_t j = 1; j <= i; ++j)
    {
        p.yt.add_term(rescale(cd.char_exponent(j)), vb.c_at(j));
        for (const auto& [m, c] : vb.tail(j).terms())
            p.yt.add_term(rescale(m), c);
    }
    return p;
}

inline UniPoly pullback(const BiPoly& f, const Parametrization& p)
{
    return bipoly_compose(f, p.xt, p.yt);
}

/// theta_{iota}(f) = ord(iota^* f); +infinity when the pullback vanishes.
inline Order valuation(const BiPoly& f, const Parametrization& p)
{
    return pullback(f, p).order();
}

struct ValuationCell
{
    std::size_t i = 0; ///< f_{i-1} is evaluated
    std::size_t j = 0; ///< under iota_j, j >= i
    Order value = Order::infinity();
    Order dy_value = Order::infinity();
    Exp expected = 0;    ///< gamma_i^{(j)}
    Exp dy_expected = 0; ///< gamma_i^{(j)} - e_j lambda_i

    bool ok() const
    {
        return value == Order(expected) && dy_value == Order(dy_expected);
    }
};

struct ValuationTable
{
    std::vector<ValuationCell> cells;

    bool all_ok() const
    {
        for (const auto& c : cells)
            if (!c.ok())
                return false;
        return true;
    }
};

/// For 1 <= i <= j <= s, theta_{iota_j}(f_{i-1}) and theta_{iota_j}(d/dy f_{i-1})
/// against the predicted gamma_i^{(j)} and gamma_i^{(j)} - e_j lambda_i.
/// `fs` holds f_0, f_1, ...; only f_0..f_{s-1} enter the table.
inline ValuationTable valuation_table(std::span<const BiPoly> fs, const ValidatedBranch& vb)
{
    const CharData& cd = vb.cd;
    const std::size_t s = cd.s();
    if (fs.size() > s)
        fs = fs.first(s);
    ValuationTable table;
    for (std::size_t j = 1; j <= s; ++j)
    {
        const Parametrization p = truncation(vb, j);
        const SemigroupDesc sd = generators(cd, j);
        for (std::size_t i = 1; i <= std::min(j, fs.size()); ++i)
        {
            ValuationCell cell;
            cell.i = i;
            cell.j = j;
            cell.value = valuation(fs[i - 1], p);
            cell.dy_value = valuation(fs[i - 1].d_dy(), p);
            cell.expected = sd.gamma_at(i)[0];
            cell.dy_expected = cell.expected - Rat(cd.lambda(i) * Rat(cd.e(j))).get_num().get_si();
            table.cells.push_back(cell);
        }
    }
    return table;
}

} // namespace branchlift

#endif // BRANCHLIFT_PARAMETRIZE_HPP
