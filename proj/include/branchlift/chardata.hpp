#ifndef BRANCHLIFT_CHARDATA_HPP
#define BRANCHLIFT_CHARDATA_HPP

// Characteristic data of a plane branch x = t^k, y = zeta(t): the exponents
// lambda_i where the exponent lattice grows, the index jumps k_i and the
// partial products e_i = k_1 ... k_i.

#include <branchlift/algebra.hpp>

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace branchlift
{

struct CharData
{
    Exp k = 1;
    std::vector<Rat> lambdas; ///< lambda_1 < ... < lambda_s
    std::vector<Exp> ks;      ///< k_1, ..., k_s
    std::vector<Exp> es;      ///< e_0 = 1, e_1, ..., e_s = k

    std::size_t s() const { return lambdas.size(); }

    // 1-based accessors, matching the level indices used everywhere else.
    const Rat& lambda(std::size_t i) const { return lambdas.at(i - 1); }
    Exp k_at(std::size_t i) const { return ks.at(i - 1); }
    Exp e(std::size_t i) const { return es.at(i); }

    /// t-exponent k * lambda_i of the i-th characteristic term.
    Exp char_exponent(std::size_t i) const
    {
        Rat v = lambda(i) * Rat(k);
        return v.get_num().get_si();
    }

    friend bool operator==(const CharData&, const CharData&) = default;
};

/// Reads the characteristic exponents off the running gcd of k and the
/// t-exponents taken in increasing order.
inline CharData extract_characteristics(Exp k, const std::set<Exp>& support)
{
    if (k < 1)
        throw Error(Errc::NonPrimitive, "multiplicity must be positive");
    if (support.empty())
        throw Error(Errc::EmptySupport, "branch has no terms");
    CharData cd;
    cd.k = k;
    cd.es.push_back(1);
    Exp g = k;
    for (Exp m : support)
    {
        if (m <= 0)
            throw Error(Errc::NonIntegralExponent, "t-exponents must be positive");
        Exp next = std::gcd(g, m);
        if (next < g)
        {
            cd.lambdas.push_back(make_rat(m, k));
            cd.ks.push_back(g / next);
            cd.es.push_back(cd.es.back() * (g / next));
            g = next;
        }
    }
    if (g != 1)
        throw Error(Errc::NonPrimitive,
                    "gcd(k, support) = " + std::to_string(g) + " > 1; parametrization is not primitive");
    return cd;
}

/// a in M_i = Z + Z lambda_1 + ... + Z lambda_i. In dimension one M_i is the
/// cyclic group (1/e_i) Z.
inline bool in_lattice(const Rat& a, std::size_t i, const CharData& cd)
{
    if (i > cd.s())
        throw Error(Errc::IndexOutOfRange, "lattice level " + std::to_string(i) + " > s");
    return is_integer(a * Rat(cd.e(i)));
}

//------------------------------------------------------------------------------
/// Raw parametrization data: x = t^k, y = sum of coeff * t^exp.
/// A term may carry a declared level j, asserting it belongs to phi_j.
struct BranchInput
{
    Exp k = 1;
    std::map<Exp, Rat> terms;
    std::map<Exp, std::size_t> declared_levels;
};

/// A branch split as c_1 t^{k lambda_1} + phi_1 + ... + c_s t^{k lambda_s} + phi_s.
struct ValidatedBranch
{
    BranchInput input;
    CharData cd;
    std::vector<Rat> c;            ///< c_1, ..., c_s
    std::vector<UniPoly> tails;    ///< phi_1, ..., phi_s in the variable t
    std::vector<std::string> warnings;

    const Rat& c_at(std::size_t i) const { return c.at(i - 1); }
    const UniPoly& tail(std::size_t i) const { return tails.at(i - 1); }
};

inline ValidatedBranch validate_branch(const BranchInput& b, bool lenient = false)
{
    if (b.k < 1)
        throw Error(Errc::NonPrimitive, "multiplicity must be positive");
    if (b.terms.empty())
        throw Error(Errc::EmptySupport, "branch has no terms");
    std::set<Exp> support;
    for (const auto& [e, c] : b.terms)
    {
        if (c == 0)
            throw Error(Errc::ParseError, "zero coefficient at exponent " + std::to_string(e));
        if (e <= 0)
            throw Error(Errc::NonIntegralExponent, "t-exponents must be positive");
        if (e % b.k == 0)
            throw Error(Errc::IntegerExponentPresent,
                        "term t^" + std::to_string(e) + " is x^" + std::to_string(e / b.k));
        support.insert(e);
    }

    ValidatedBranch v;
    v.input = b;
    v.cd = extract_characteristics(b.k, support);
    const CharData& cd = v.cd;
    const std::size_t s = cd.s();
    v.c.assign(s, Rat(0));
    v.tails.assign(s, UniPoly());

    // Level by position: the last characteristic exponent not above e.
    auto position_level = [&](Exp e) {
        std::size_t lvl = 0;
        for (std::size_t i = 1; i <= s; ++i)
            if (cd.char_exponent(i) <= e)
                lvl = i;
        return lvl;
    };

    for (const auto& [e, coeff] : b.terms)
    {
        const std::size_t pos = position_level(e);
        const bool characteristic = pos > 0 && cd.char_exponent(pos) == e;
        auto declared = b.declared_levels.find(e);

        if (characteristic)
        {
            if (declared != b.declared_levels.end() && declared->second != pos)
                throw Error(Errc::TailOrderViolation,
                            "t^" + std::to_string(e) + " is characteristic term " + std::to_string(pos) +
                                ", declared at level " + std::to_string(declared->second));
            v.c[pos - 1] = coeff;
            continue;
        }

        std::size_t level = pos;
        if (declared != b.declared_levels.end())
        {
            const std::size_t d = declared->second;
            if (d < 1 || d > s)
                throw Error(Errc::IndexOutOfRange, "declared level " + std::to_string(d) + " outside 1.." +
                                                       std::to_string(s));
            if (!in_lattice(make_rat(e, b.k), d, cd))
                throw Error(Errc::TailOutsideLattice,
                            "t^" + std::to_string(e) + " is not in k*M_" + std::to_string(d));
            if (e <= cd.char_exponent(d))
                throw Error(Errc::TailOrderViolation,
                            "t^" + std::to_string(e) + " does not exceed k*lambda_" + std::to_string(d));
            if (d < s && e >= cd.char_exponent(d + 1))
            {
                if (!lenient)
                    throw Error(Errc::TailOrderViolation,
                                "deg(phi_" + std::to_string(d) + ") >= k*lambda_" + std::to_string(d + 1));
                v.warnings.push_back("t^" + std::to_string(e) + " moved from phi_" + std::to_string(d) +
                                     " to phi_" + std::to_string(pos));
            }
            else
                level = d;
        }
        if (level == 0)
            throw Error(Errc::TailOrderViolation,
                        "t^" + std::to_string(e) + " precedes the first characteristic exponent");
        if (!in_lattice(make_rat(e, b.k), level, cd))
            throw Error(Errc::TailOutsideLattice,
                        "t^" + std::to_string(e) + " is not in k*M_" + std::to_string(level));
        v.tails[level - 1].add_term(e, coeff);
    }
    return v;
}

} // namespace branchlift

#endif // BRANCHLIFT_CHARDATA_HPP
