#ifndef BRANCHLIFT_SEMIGROUP_HPP
#define BRANCHLIFT_SEMIGROUP_HPP

// Value semigroups Gamma(lambda_1, ..., lambda_i) of quasi-ordinary branches
// in arbitrary dimension n. The plane-curve pipeline uses n = 1.

#include <branchlift/chardata.hpp>

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace branchlift
{

using IntVec = std::vector<Exp>;

/// Componentwise partial order on Z^n.
inline bool vec_leq(const IntVec& a, const IntVec& b)
{
    for (std::size_t c = 0; c < a.size(); ++c)
        if (a[c] > b[c])
            return false;
    return true;
}

inline bool vec_less(const IntVec& a, const IntVec& b)
{
    return vec_leq(a, b) && a != b;
}

namespace detail
{

inline IntVec axpy(const IntVec& a, Exp m, const IntVec& b)
{
    IntVec r = a;
    for (std::size_t c = 0; c < r.size(); ++c)
        r[c] += m * b[c];
    return r;
}

inline Exp lcm_den(const std::vector<Rat>& v, Exp acc)
{
    for (const auto& q : v)
        acc = std::lcm(acc, static_cast<Exp>(q.get_den().get_si()));
    return acc;
}

} // namespace detail

//------------------------------------------------------------------------------
/// Subgroup of Z^n generated by a finite set of vectors, kept in Hermite
/// (row echelon) form.
class IntLattice
{
public:
    IntLattice(std::size_t n, std::vector<IntVec> gens) : n_(n)
    {
        for (auto& g : gens)
            if (g.size() != n)
                throw Error(Errc::IndexOutOfRange, "generator dimension mismatch");
        std::size_t row = 0;
        for (std::size_t col = 0; col < n && row < gens.size(); ++col)
        {
            // Euclid on column col among rows >= row.
            for (;;)
            {
                std::size_t best = gens.size();
                for (std::size_t r = row; r < gens.size(); ++r)
                    if (gens[r][col] != 0 && (best == gens.size() || std::abs(gens[r][col]) < std::abs(gens[best][col])))
                        best = r;
                if (best == gens.size())
                    break;
                std::swap(gens[row], gens[best]);
                bool done = true;
                for (std::size_t r = row + 1; r < gens.size(); ++r)
                {
                    if (gens[r][col] == 0)
                        continue;
                    Exp q = gens[r][col] / gens[row][col];
                    gens[r] = detail::axpy(gens[r], -q, gens[row]);
                    if (gens[r][col] != 0)
                        done = false;
                }
                if (done)
                    break;
            }
            if (row < gens.size() && gens[row][col] != 0)
            {
                if (gens[row][col] < 0)
                    for (auto& v : gens[row])
                        v = -v;
                pivots_.push_back(col);
                basis_.push_back(gens[row]);
                ++row;
            }
        }
    }

    std::size_t dimension() const { return n_; }
    const std::vector<IntVec>& basis() const { return basis_; }

    bool contains(IntVec v) const
    {
        if (v.size() != n_)
            return false;
        for (std::size_t r = 0; r < basis_.size(); ++r)
        {
            const std::size_t col = pivots_[r];
            for (std::size_t c = (r == 0 ? 0 : pivots_[r - 1] + 1); c < col; ++c)
                if (v[c] != 0)
                    return false;
            if (v[col] % basis_[r][col] != 0)
                return false;
            v = detail::axpy(v, -(v[col] / basis_[r][col]), basis_[r]);
        }
        for (Exp c : v)
            if (c != 0)
                return false;
        return true;
    }

private:
    std::size_t n_;
    std::vector<IntVec> basis_;
    std::vector<std::size_t> pivots_;
};

//------------------------------------------------------------------------------
/// Characteristic data of a quasi-ordinary branch in dimension n.
struct QOCharData
{
    std::size_t n = 1;
    std::vector<std::vector<Rat>> lambdas; ///< lambda_1 < ... < lambda_s in Q^n
    std::vector<Exp> ks;                   ///< k_1, ..., k_s
    std::vector<Exp> es;                   ///< e_0 = 1, ..., e_s

    std::size_t s() const { return lambdas.size(); }
};

/// Computes k_i as the order of lambda_i modulo M_{i-1} and checks C1, C2.
inline QOCharData quasi_ordinary_data(std::size_t n, std::vector<std::vector<Rat>> lambdas)
{
    QOCharData q;
    q.n = n;
    q.es.push_back(1);
    for (std::size_t i = 0; i < lambdas.size(); ++i)
    {
        const auto& lam = lambdas[i];
        if (lam.size() != n)
            throw Error(Errc::IndexOutOfRange, "exponent dimension mismatch");
        for (const auto& v : lam)
            if (v < 0)
                throw Error(Errc::TailOrderViolation, "characteristic exponents must be non-negative");
        if (i > 0)
        {
            bool leq = true, equal = true;
            for (std::size_t c = 0; c < n; ++c)
            {
                leq = leq && lambdas[i - 1][c] <= lam[c];
                equal = equal && lambdas[i - 1][c] == lam[c];
            }
            if (!leq || equal)
                throw Error(Errc::TailOrderViolation, "characteristic exponents must increase");
        }
        Exp den = 1;
        for (std::size_t j = 0; j <= i; ++j)
            den = detail::lcm_den(lambdas[j], den);
        std::vector<IntVec> gens;
        for (std::size_t c = 0; c < n; ++c)
        {
            IntVec u(n, 0);
            u[c] = den;
            gens.push_back(u);
        }
        auto scaled = [&](const std::vector<Rat>& v, Exp m) {
            IntVec r(n);
            for (std::size_t c = 0; c < n; ++c)
                r[c] = Rat(v[c] * Rat(den * m)).get_num().get_si();
            return r;
        };
        for (std::size_t j = 0; j < i; ++j)
            gens.push_back(scaled(lambdas[j], 1));
        IntLattice prev(n, gens);
        Exp order = 1;
        while (!prev.contains(scaled(lam, order)))
            ++order;
        if (order < 2)
            throw Error(Errc::NotInGroup, "lambda_" + std::to_string(i + 1) + " lies in M_" + std::to_string(i));
        q.ks.push_back(order);
        q.es.push_back(q.es.back() * order);
    }
    q.lambdas = std::move(lambdas);
    return q;
}

inline QOCharData quasi_ordinary_data(const CharData& cd)
{
    QOCharData q;
    q.n = 1;
    for (const auto& l : cd.lambdas)
        q.lambdas.push_back({l});
    q.ks = cd.ks;
    q.es = cd.es;
    return q;
}

//------------------------------------------------------------------------------
/// Generators e_i u_1, ..., e_i u_n, gamma_1^(i), ..., gamma_i^(i) of
/// Gamma(lambda_1, ..., lambda_i).
struct SemigroupDesc
{
    std::size_t n = 1;
    std::size_t level = 0;
    Exp e = 1;                 ///< e_level
    std::vector<IntVec> gamma; ///< gamma_1, ..., gamma_level
    std::vector<Exp> ks;       ///< k_1, ..., k_level
    std::vector<Exp> es;       ///< e_0, ..., e_level

    const IntVec& gamma_at(std::size_t j) const { return gamma.at(j - 1); }
    Exp k_at(std::size_t j) const { return ks.at(j - 1); }

    /// Generators of the subgroup/subsemigroup using gamma_1..gamma_upto.
    std::vector<IntVec> generator_list(std::size_t upto) const
    {
        std::vector<IntVec> g;
        for (std::size_t c = 0; c < n; ++c)
        {
            IntVec u(n, 0);
            u[c] = e;
            g.push_back(u);
        }
        for (std::size_t j = 0; j < upto; ++j)
            g.push_back(gamma[j]);
        return g;
    }

    /// n = 1 convenience: (e; gamma_1, ..., gamma_level) as scalars.
    std::vector<Exp> scalar_generators() const
    {
        std::vector<Exp> out{e};
        for (const auto& g : gamma)
            out.push_back(g.at(0));
        return out;
    }
};

/// gamma_1 = e_i lambda_1, gamma_{j+1} = k_j gamma_j - e_i lambda_j + e_i lambda_{j+1}.
inline SemigroupDesc generators(const QOCharData& q, std::size_t i)
{
    if (i < 1 || i > q.s())
        throw Error(Errc::IndexOutOfRange, "semigroup level " + std::to_string(i));
    SemigroupDesc sd;
    sd.n = q.n;
    sd.level = i;
    sd.e = q.es.at(i);
    sd.ks.assign(q.ks.begin(), q.ks.begin() + static_cast<std::ptrdiff_t>(i));
    sd.es.assign(q.es.begin(), q.es.begin() + static_cast<std::ptrdiff_t>(i + 1));
    auto e_lambda = [&](std::size_t j) {
        IntVec r(q.n);
        for (std::size_t c = 0; c < q.n; ++c)
        {
            Rat v = q.lambdas[j - 1][c] * Rat(sd.e);
            if (!is_integer(v))
                throw Error(Errc::NonIntegralGenerator, "e_i * lambda_j is not integral");
            r[c] = v.get_num().get_si();
        }
        return r;
    };
    sd.gamma.push_back(e_lambda(1));
    for (std::size_t j = 1; j < i; ++j)
    {
        IntVec lo = e_lambda(j), hi = e_lambda(j + 1);
        IntVec next(q.n);
        for (std::size_t c = 0; c < q.n; ++c)
            next[c] = q.ks[j - 1] * sd.gamma[j - 1][c] - lo[c] + hi[c];
        sd.gamma.push_back(next);
    }
    return sd;
}

inline SemigroupDesc generators(const CharData& cd, std::size_t i)
{
    return generators(quasi_ordinary_data(cd), i);
}

/// Gamma_i(lambda_1..lambda_s) = (e_s / e_i) Gamma(lambda_1..lambda_i) on generators.
inline bool scale_relation_check(const SemigroupDesc& top, const SemigroupDesc& low)
{
    if (low.level > top.level || low.n != top.n || top.e % low.e != 0)
        return false;
    const Exp factor = top.e / low.e;
    for (std::size_t j = 0; j < low.level; ++j)
        for (std::size_t c = 0; c < top.n; ++c)
            if (top.gamma[j][c] != factor * low.gamma[j][c])
                return false;
    return true;
}

//------------------------------------------------------------------------------
inline bool group_member(const IntVec& a, const SemigroupDesc& sd, std::size_t upto)
{
    return IntLattice(sd.n, sd.generator_list(upto)).contains(a);
}

inline bool group_member(const IntVec& a, const SemigroupDesc& sd)
{
    return group_member(a, sd, sd.level);
}

struct NormalForm
{
    IntVec alphas;             ///< coefficients of e u_1, ..., e u_n
    std::vector<Exp> betas;    ///< 0 <= beta_j <= k_j - 1

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// a = sum alpha_c e u_c + sum beta_j gamma_j with capped betas. The
/// quotient of consecutive groups G_j / G_{j-1} is cyclic of order k_j,
/// generated by gamma_j, so beta_j is the residue class of a modulo G_{j-1}.
inline NormalForm normal_form(const IntVec& a, const SemigroupDesc& sd, std::size_t upto)
{
    if (upto > sd.level)
        throw Error(Errc::IndexOutOfRange, "normal form level above descriptor level");
    if (a.size() != sd.n)
        throw Error(Errc::IndexOutOfRange, "vector dimension mismatch");
    if (!group_member(a, sd, upto))
        throw Error(Errc::NotInGroup, "value is not in the group generated by the semigroup");
    NormalForm nf;
    nf.betas.assign(upto, 0);
    IntVec rest = a;
    for (std::size_t j = upto; j >= 1; --j)
    {
        IntLattice lower(sd.n, sd.generator_list(j - 1));
        Exp b = 0;
        while (b < sd.k_at(j) && !lower.contains(detail::axpy(rest, -b, sd.gamma_at(j))))
            ++b;
        if (b == sd.k_at(j))
            throw Error(Errc::NotInGroup, "no capped residue found; inconsistent descriptor");
        nf.betas[j - 1] = b;
        rest = detail::axpy(rest, -b, sd.gamma_at(j));
    }
    nf.alphas.resize(sd.n);
    for (std::size_t c = 0; c < sd.n; ++c)
        nf.alphas[c] = rest[c] / sd.e;
    return nf;
}

inline NormalForm normal_form(const IntVec& a, const SemigroupDesc& sd)
{
    return normal_form(a, sd, sd.level);
}

inline IntVec recombine(const NormalForm& nf, const SemigroupDesc& sd)
{
    IntVec a(sd.n, 0);
    for (std::size_t c = 0; c < sd.n; ++c)
        a[c] = nf.alphas[c] * sd.e;
    for (std::size_t j = 0; j < nf.betas.size(); ++j)
        a = detail::axpy(a, nf.betas[j], sd.gamma[j]);
    return a;
}

/// Membership in the semigroup generated by e u_c and gamma_1..gamma_upto.
inline bool semigroup_member(const IntVec& a, const SemigroupDesc& sd, std::size_t upto)
{
    if (!group_member(a, sd, upto))
        return false;
    NormalForm nf = normal_form(a, sd, upto);
    for (Exp v : nf.alphas)
        if (v < 0)
            return false;
    return true;
}

inline bool semigroup_member(const IntVec& a, const SemigroupDesc& sd)
{
    return semigroup_member(a, sd, sd.level);
}

inline bool semigroup_member(Exp a, const SemigroupDesc& sd)
{
    return semigroup_member(IntVec{a}, sd);
}

/// Sum of (k_j - 1) gamma_j over j = 1..upto; beyond it every group element
/// is a semigroup element.
inline IntVec conductor_bound(const SemigroupDesc& sd, std::size_t upto)
{
    IntVec c(sd.n, 0);
    for (std::size_t j = 1; j <= upto; ++j)
        c = detail::axpy(c, sd.k_at(j) - 1, sd.gamma_at(j));
    return c;
}

//------------------------------------------------------------------------------
struct IdentityCheck
{
    std::string name; ///< "A", "B", "C" or "D"
    std::size_t index = 0;
    bool pass = false;
    std::string detail;
};

struct IdentityReport
{
    std::vector<IdentityCheck> checks;

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

namespace detail
{

inline std::string vec_str(const IntVec& v)
{
    if (v.size() == 1)
        return std::to_string(v[0]);
    std::string s = "(";
    for (std::size_t c = 0; c < v.size(); ++c)
        s += (c ? "," : "") + std::to_string(v[c]);
    return s + ")";
}

} // namespace detail

/// Checks the structural identities of the generator sequence:
///  (A) gamma_{j+1} = e lambda_{j+1} + sum_{m<=j} (k_m - 1) gamma_m
///  (B) k_j gamma_j > sum_{m<=j} (k_m - 1) gamma_m
///  (C) k_j gamma_j lies in the semigroup generated by e, gamma_1..gamma_{j-1}
///  (D) e_{j-1} gamma_level - e_{level-1} gamma_j > 0 for j < level
inline IdentityReport identity_suite(const SemigroupDesc& sd, const QOCharData& q)
{
    IdentityReport rep;
    const std::size_t L = sd.level;
    auto e_lambda = [&](std::size_t j) {
        IntVec r(sd.n);
        for (std::size_t c = 0; c < sd.n; ++c)
            r[c] = Rat(q.lambdas[j - 1][c] * Rat(sd.e)).get_num().get_si();
        return r;
    };
    for (std::size_t j = 0; j < L; ++j)
    {
        IntVec rhs = e_lambda(j + 1);
        for (std::size_t m = 1; m <= j; ++m)
            rhs = detail::axpy(rhs, sd.k_at(m) - 1, sd.gamma_at(m));
        rep.checks.push_back({"A", j, rhs == sd.gamma_at(j + 1),
                              "gamma_" + std::to_string(j + 1) + " = " + detail::vec_str(sd.gamma_at(j + 1)) +
                                  ", formula gives " + detail::vec_str(rhs)});
    }
    for (std::size_t j = 1; j <= L; ++j)
    {
        IntVec kg = detail::axpy(IntVec(sd.n, 0), sd.k_at(j), sd.gamma_at(j));
        IntVec sum = conductor_bound(sd, j);
        rep.checks.push_back({"B", j, vec_less(sum, kg),
                              detail::vec_str(kg) + " > " + detail::vec_str(sum)});
        bool member = semigroup_member(kg, sd, j - 1);
        rep.checks.push_back({"C", j, member,
                              "k_" + std::to_string(j) + "*gamma_" + std::to_string(j) + " = " +
                                  detail::vec_str(kg) + " in Gamma_" + std::to_string(j - 1)});
    }
    for (std::size_t j = 1; L >= 2 && j < L; ++j)
    {
        IntVec diff = detail::axpy(detail::axpy(IntVec(sd.n, 0), sd.es[j - 1], sd.gamma_at(L)),
                                   -sd.es[L - 1], sd.gamma_at(j));
        rep.checks.push_back({"D", j, vec_less(IntVec(sd.n, 0), diff),
                              "e_" + std::to_string(j - 1) + "*gamma_" + std::to_string(L) + " - e_" +
                                  std::to_string(L - 1) + "*gamma_" + std::to_string(j) + " = " +
                                  detail::vec_str(diff)});
    }
    return rep;
}

inline IdentityReport identity_suite(const SemigroupDesc& sd, const CharData& cd)
{
    return identity_suite(sd, quasi_ordinary_data(cd));
}

} // namespace branchlift

#endif // BRANCHLIFT_SEMIGROUP_HPP
