#ifndef BRANCHLIFT_WEIERSTRASS_HPP
#define BRANCHLIFT_WEIERSTRASS_HPP

// Division by Weierstrass polynomials in y and the f_{i-1}-adic / monomial
// basis expansions built from it.

#include <branchlift/chardata.hpp>

#include <algorithm>
#include <span>
#include <vector>

namespace branchlift
{

/// Monic in y of degree m >= 1 and every lower y-coefficient vanishes at x = 0.
inline bool is_weierstrass(const BiPoly& p)
{
    if (p.is_zero())
        return false;
    const Exp m = p.deg_y().value();
    if (m < 1 || p.coeff_y(m) != BiPoly::constant(Rat(1)))
        return false;
    for (Exp l = 0; l < m; ++l)
        if (p.contains(0, l))
            return false;
    return true;
}

struct Division
{
    BiPoly q;
    BiPoly r;
};

namespace detail
{

/// Long division in y over Q[x]; p must be monic in y.
inline Division divide_monic_y(const BiPoly& g, const BiPoly& p)
{
    const Exp m = p.deg_y().value();
    Division d;
    d.r = g;
    while (!d.r.is_zero() && d.r.deg_y().value() >= m)
    {
        const Exp top = d.r.deg_y().value();
        const BiPoly lead = d.r.coeff_y(top);
        for (const auto& [mono, c] : lead.terms())
        {
            d.q.add_term(mono.x, top - m, c);
            d.r.add_scaled(p, -c, mono.x, top - m);
        }
    }
    return d;
}

} // namespace detail

/// g = q p + r with deg_y r < m = deg_y p, for deg_y g > m.
inline Division weierstrass_divide(const BiPoly& g, const BiPoly& p)
{
    if (!is_weierstrass(p))
        throw Error(Errc::NotWeierstrass, "divisor is not a Weierstrass polynomial in y");
    const Order n = g.deg_y();
    const Exp m = p.deg_y().value();
    if (n.is_infinite() || n.value() <= m)
        throw Error(Errc::DegreeTooSmall,
                    "deg_y(g) = " + to_string(n) + " does not exceed deg_y(p) = " + std::to_string(m));
    return detail::divide_monic_y(g, p);
}

//------------------------------------------------------------------------------
/// g = sum_l a_l f_{i-1}^l with deg_y a_l < e_{i-1}.
struct AdicDecomposition
{
    std::size_t level = 0;
    std::vector<BiPoly> coeffs; ///< a_0, ..., a_d (trailing zeros trimmed)

    std::size_t d() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// `fs` holds f_0, ..., f_{i-1}. Divides by the highest useful power of
/// f_{i-1} first, then continues on the remainder.
inline AdicDecomposition adic_decompose(const BiPoly& g, std::span<const BiPoly> fs, const CharData& cd,
                                        std::size_t i)
{
    if (i < 1 || i > cd.s() || fs.size() < i)
        throw Error(Errc::IndexOutOfRange, "adic decomposition level " + std::to_string(i));
    const Exp e_prev = cd.e(i - 1);
    const Exp e_cur = cd.e(i);
    if (g.deg_y().is_finite() && g.deg_y().value() >= e_cur)
        throw Error(Errc::DegreeOutOfRange,
                    "deg_y(g) = " + to_string(g.deg_y()) + " >= e_" + std::to_string(i) + " = " +
                        std::to_string(e_cur));
    const BiPoly& base = fs[i - 1];
    AdicDecomposition dec;
    dec.level = i;
    dec.coeffs.assign(static_cast<std::size_t>(cd.k_at(i)), BiPoly());
    std::vector<BiPoly> powers{BiPoly::constant(Rat(1))};
    BiPoly rest = g;
    while (!rest.is_zero() && rest.deg_y().value() >= e_prev)
    {
        const auto d = static_cast<std::size_t>(rest.deg_y().value() / e_prev);
        while (powers.size() <= d)
            powers.push_back(powers.back() * base);
        Division div = detail::divide_monic_y(rest, powers[d]);
        dec.coeffs[d] += div.q;
        rest = std::move(div.r);
    }
    dec.coeffs[0] += rest;
    while (!dec.coeffs.empty() && dec.coeffs.back().is_zero())
        dec.coeffs.pop_back();
    return dec;
}

inline BiPoly reconstruct(const AdicDecomposition& dec, const BiPoly& base)
{
    BiPoly out;
    BiPoly power = BiPoly::constant(Rat(1));
    for (const auto& a : dec.coeffs)
    {
        out += a * power;
        power = power * base;
    }
    return out;
}

//------------------------------------------------------------------------------
/// c * x^alpha * y^{beta_0} * f_1^{beta_1} ... f_{i-1}^{beta_{i-1}}
struct BasisTerm
{
    Rat c;
    Exp alpha = 0;
    std::vector<Exp> betas;

    friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

/// x^alpha * prod_l f_l^{betas[l]}, with f_0 = y.
inline BiPoly basis_product(Exp alpha, std::span<const Exp> betas, std::span<const BiPoly> fs)
{
    BiPoly out = BiPoly::monomial(alpha, 0);
    for (std::size_t l = 0; l < betas.size(); ++l)
        if (betas[l] > 0)
            out = out * pow(fs[l], static_cast<unsigned>(betas[l]));
    return out;
}

inline std::vector<BasisTerm> basis_decompose(const BiPoly& g, std::span<const BiPoly> fs, const CharData& cd,
                                              std::size_t i)
{
    AdicDecomposition dec = adic_decompose(g, fs, cd, i);
    std::vector<BasisTerm> out;
    for (std::size_t l = 0; l < dec.coeffs.size(); ++l)
    {
        const BiPoly& a = dec.coeffs[l];
        if (a.is_zero())
            continue;
        if (i == 1)
        {
            for (const auto& [m, c] : a.terms())
                out.push_back({c, m.x, {static_cast<Exp>(l)}});
            continue;
        }
        for (auto term : basis_decompose(a, fs, cd, i - 1))
        {
            term.betas.push_back(static_cast<Exp>(l));
            out.push_back(std::move(term));
        }
    }
    std::sort(out.begin(), out.end(), [](const BasisTerm& a, const BasisTerm& b) {
        if (a.alpha != b.alpha)
            return a.alpha < b.alpha;
        return a.betas < b.betas;
    });
    return out;
}

inline BiPoly reconstruct(std::span<const BasisTerm> terms, std::span<const BiPoly> fs)
{
    BiPoly out;
    for (const auto& t : terms)
        out += basis_product(t.alpha, t.betas, fs).scaled(t.c);
    return out;
}

} // namespace branchlift

#endif // BRANCHLIFT_WEIERSTRASS_HPP
