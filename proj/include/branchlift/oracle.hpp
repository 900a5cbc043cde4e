#ifndef BRANCHLIFT_ORACLE_HPP
#define BRANCHLIFT_ORACLE_HPP

// Independent implicitization: the resultant in t of x - xt(t) and
// y - yt(t), computed as a Sylvester determinant over Q[x,y].

#include <branchlift/parametrize.hpp>

#include <vector>

namespace branchlift
{

inline constexpr std::size_t default_oracle_bound = 12;

struct OracleResult
{
    BiPoly g;  ///< resultant divided by its y^{e} coefficient
    Rat unit;  ///< raw resultant = unit * g
};

/// Sylvester matrix of two polynomials in t given by coefficient lists
/// (index = t-degree) over Q[x,y].
inline BiMatrix sylvester_matrix(const std::vector<BiPoly>& a, const std::vector<BiPoly>& b)
{
    const std::size_t m = a.size() - 1;
    const std::size_t d = b.size() - 1;
    const std::size_t n = m + d;
    BiMatrix s(n, std::vector<BiPoly>(n));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t j = 0; j <= m; ++j)
            s[r][r + (m - j)] = a[j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= d; ++j)
            s[d + r][r + (d - j)] = b[j];
    return s;
}

inline OracleResult resultant_implicitize(const Parametrization& p, std::size_t bound = default_oracle_bound)
{
    if (p.e > static_cast<Exp>(bound))
        throw Error(Errc::BoundExceeded,
                    "e_" + std::to_string(p.level) + " = " + std::to_string(p.e) + " exceeds oracle bound " +
                        std::to_string(bound));
    if (p.xt.is_zero() || p.yt.is_zero())
        throw Error(Errc::DegreeOutOfRange, "degenerate parametrization");

    auto in_t = [](const UniPoly& u, const BiPoly& var) {
        std::vector<BiPoly> c(static_cast<std::size_t>(u.degree().value()) + 1);
        for (const auto& [e, v] : u.terms())
            c[static_cast<std::size_t>(e)] = BiPoly::constant(-v);
        c[0] += var;
        return c;
    };
    BiPoly res = sylvester_det(sylvester_matrix(in_t(p.xt, BiPoly::x()), in_t(p.yt, BiPoly::y())));
    if (res.is_zero())
        throw Error(Errc::DegreeOutOfRange, "resultant vanished");
    const Exp top = res.deg_y().value();
    BiPoly lead = res.coeff_y(top);
    if (!lead.is_constant())
        throw Error(Errc::NotWeierstrass, "resultant is not monic up to a unit in y");
    OracleResult out;
    out.unit = lead.terms().begin()->second;
    out.g = res.scaled(Rat(1) / out.unit);
    return out;
}

} // namespace branchlift

#endif // BRANCHLIFT_ORACLE_HPP
