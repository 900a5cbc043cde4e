#ifndef BRANCHLIFT_IMPLICITIZE_HPP
#define BRANCHLIFT_IMPLICITIZE_HPP

// Semigroup-guided elimination: builds f_i from f_{i-1}^{k_i} by cancelling
// the lowest t-power of the pullback, one basis product at a time.

#include <branchlift/oracle.hpp>
#include <branchlift/polygon.hpp>
#include <branchlift/weierstrass.hpp>

#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace branchlift
{

enum class PivotPolicy
{
    LexSmallest,
    LexLargest,
};

struct LiftOptions
{
    PivotPolicy pivot = PivotPolicy::LexSmallest;
    bool verify = true;
    std::size_t oracle_bound = default_oracle_bound;
};

struct Iteration
{
    Exp n = 0;                ///< t-order being cancelled
    IntVec pivot;             ///< (alpha, beta_0, ..., beta_{i-1})
    Rat coefficient;          ///< multiplier of the pivot basis product
    std::size_t slice_size = 0;
};

enum class OracleStatus
{
    Matched,
    Mismatch,
    Skipped,
};

inline std::string_view oracle_status_name(OracleStatus s)
{
    switch (s)
    {
    case OracleStatus::Matched:  return "matched";
    case OracleStatus::Mismatch: return "mismatch";
    case OracleStatus::Skipped:  return "skipped";
    }
    return "unknown";
}

struct LevelCertificate
{
    bool pullback_vanishes = false;  ///< iota_i^* f_i = 0
    bool monic_weierstrass = false;  ///< f_i monic of degree e_i in y, Weierstrass
    bool support_in_polygon = false; ///< Supp(f_i) in N_i
    bool delta_avoids_apex = false;  ///< Supp(delta_i) in N_i minus (0, e_i)
    bool compact_face = false;       ///< (0,e_i), (e_i lambda_1, 0) in Supp(f_i)
    bool log_increasing = true;      ///< logged n strictly increasing
    bool log_in_semigroup = true;    ///< every logged n in Gamma(lambda_1..lambda_i)
    OracleStatus oracle = OracleStatus::Skipped;

    bool pass() const
    {
        return pullback_vanishes && monic_weierstrass && support_in_polygon && delta_avoids_apex && compact_face &&
               log_increasing && log_in_semigroup && oracle != OracleStatus::Mismatch;
    }
};

struct LevelResult
{
    std::size_t level = 0;
    BiPoly f;
    BiPoly delta;
    std::vector<Iteration> log;
    double seconds = 0;
    LevelCertificate cert;
};

struct LiftChain
{
    ValidatedBranch branch;
    std::vector<BiPoly> fs;          ///< f_0 = y, f_1, ..., f_s
    std::vector<LevelResult> levels; ///< levels 1..s (index 0 is level 1)
    ValuationTable table;
    bool verified = false;

    const BiPoly& f(std::size_t i) const { return fs.at(i); }
    const LevelResult& level(std::size_t i) const { return levels.at(i - 1); }

    bool all_pass() const
    {
        if (!verified || !table.all_ok())
            return false;
        for (const auto& l : levels)
            if (!l.cert.pass())
                return false;
        return true;
    }
};

struct LiftResult
{
    BiPoly f;
    BiPoly delta;
    std::vector<Iteration> log;
};

/// Degree of iota_i^* f_l for l = 0..i-1 together with e_i: the load vector
/// LS_i of the slice constraint.
inline SliceQuery slice_template(const Parametrization& p, const SemigroupDesc& sd,
                                 std::span<const UniPoly> pulled)
{
    SliceQuery q;
    q.sg.push_back(sd.e);
    for (const auto& g : sd.gamma)
        q.sg.push_back(g.at(0));
    q.ls.push_back(p.e);
    for (const auto& u : pulled)
        q.ls.push_back(u.degree().value());
    q.bound = p.e * p.yt.degree().value();
    return q;
}

/// One level of the elimination. `fs` holds f_0, ..., f_{i-1}.
inline LiftResult lift(std::span<const BiPoly> fs, const ValidatedBranch& vb, std::size_t i,
                       PivotPolicy policy = PivotPolicy::LexSmallest)
{
    const CharData& cd = vb.cd;
    if (i < 1 || i > cd.s() || fs.size() < i)
        throw Error(Errc::IndexOutOfRange, "lift level " + std::to_string(i));
    const Parametrization p = truncation(vb, i);
    const SemigroupDesc sd = generators(cd, i);
    const auto ki = static_cast<unsigned>(cd.k_at(i));

    std::vector<UniPoly> pulled;
    for (std::size_t l = 0; l < i; ++l)
        pulled.push_back(pullback(fs[l], p));
    SliceQuery query = slice_template(p, sd, pulled);

    LiftResult out;
    const BiPoly start = pow(fs[i - 1], ki);
    BiPoly g = start;
    UniPoly pulled_g = pow(pulled[i - 1], ki);

    IntVec excluded(i + 1, 0);
    excluded.back() = static_cast<Exp>(ki);

    // basis products keyed by (beta_0, ..., beta_{i-1}), with their pullbacks
    std::map<std::vector<Exp>, std::pair<BiPoly, UniPoly>> products;
    auto product = [&](const std::vector<Exp>& betas) -> const std::pair<BiPoly, UniPoly>& {
        auto it = products.find(betas);
        if (it != products.end())
            return it->second;
        BiPoly bi = BiPoly::constant(Rat(1));
        UniPoly uni = UniPoly::monomial(0);
        for (std::size_t l = 0; l < betas.size(); ++l)
            if (betas[l] > 0)
            {
                bi = bi * pow(fs[l], static_cast<unsigned>(betas[l]));
                uni = uni * pow(pulled[l], static_cast<unsigned>(betas[l]));
            }
        return products.emplace(betas, std::make_pair(std::move(bi), std::move(uni))).first->second;
    };

    const Exp budget = query.bound - p.e * sd.gamma_at(1)[0] + 1;
    bool first = true;
    while (!pulled_g.is_zero())
    {
        if (static_cast<Exp>(out.log.size()) >= budget)
            throw Error(Errc::IterationBudgetExceeded,
                        "level " + std::to_string(i) + " exceeded " + std::to_string(budget) + " iterations");
        const Exp n = pulled_g.order().value();
        query.n = n;
        std::vector<IntVec> slice = lattice_slice(query, first ? std::optional<IntVec>(excluded) : std::nullopt);
        if (slice.empty())
            throw Error(Errc::EmptySlice, "no basis product of valuation " + std::to_string(n) + " at level " +
                                              std::to_string(i));
        const IntVec& pivot = policy == PivotPolicy::LexSmallest ? slice.front() : slice.back();
        const Exp alpha = pivot[0];
        const std::vector<Exp> betas(pivot.begin() + 1, pivot.end());
        const auto& [bi, uni] = product(betas);
        const Rat lead = uni.coeff(n - p.e * alpha);
        if (lead == 0)
            throw Error(Errc::EmptySlice, "pivot basis product does not have valuation " + std::to_string(n));
        const Rat a = -pulled_g.coeff(n) / lead;
        g.add_scaled(bi, a, alpha, 0);
        pulled_g.add_scaled(uni, a, p.e * alpha);
        out.log.push_back({n, pivot, a, slice.size()});
        first = false;
    }

    const Exp ei = cd.e(i);
    const BiPoly top = g.coeff_y(ei);
    if (!top.is_constant() || top.is_zero())
        throw Error(Errc::NotWeierstrass, "eliminated polynomial lost its y^e_i term");
    out.f = g.scaled(Rat(1) / top.terms().begin()->second);
    out.delta = out.f - start;
    return out;
}

/// f_1: the elimination at level 1 started from y^{k_1}.
inline BiPoly base_equation(const ValidatedBranch& vb, PivotPolicy policy = PivotPolicy::LexSmallest)
{
    const std::vector<BiPoly> f0{BiPoly::y()};
    return lift(f0, vb, 1, policy).f;
}

//------------------------------------------------------------------------------
/// Certificates for one level, given f_{i-1}, f_i and the elimination log.
inline LevelCertificate certify_level(const ValidatedBranch& vb, std::size_t i, const BiPoly& prev,
                                      const BiPoly& f, std::span<const Iteration> log, std::size_t oracle_bound)
{
    const CharData& cd = vb.cd;
    const Parametrization p = truncation(vb, i);
    const PolygonDesc pd = make_polygon(vb, i);
    const SemigroupDesc sd = generators(cd, i);
    const Exp ei = cd.e(i);
    const Exp apex_x = Rat(cd.lambda(1) * Rat(ei)).get_num().get_si();
    const BiPoly delta = f - pow(prev, static_cast<unsigned>(cd.k_at(i)));

    LevelCertificate c;
    c.pullback_vanishes = !f.is_zero() && pullback(f, p).is_zero();
    c.monic_weierstrass = f.deg_y() == Order(ei) && is_weierstrass(f);
    c.support_in_polygon = support_in_polygon(f, pd);
    c.delta_avoids_apex = support_in_polygon(delta, pd) && !delta.contains(0, ei);
    c.compact_face = f.contains(0, ei) && f.contains(apex_x, 0);
    for (std::size_t t = 0; t < log.size(); ++t)
    {
        if (t > 0 && log[t].n <= log[t - 1].n)
            c.log_increasing = false;
        if (!semigroup_member(log[t].n, sd))
            c.log_in_semigroup = false;
    }
    if (ei <= static_cast<Exp>(oracle_bound))
    {
        OracleResult o = resultant_implicitize(p, oracle_bound);
        c.oracle = o.g == f ? OracleStatus::Matched : OracleStatus::Mismatch;
    }
    return c;
}

/// Recomputes every certificate of a chain in place.
inline void certify(LiftChain& chain, std::size_t oracle_bound = default_oracle_bound)
{
    for (std::size_t i = 1; i <= chain.levels.size(); ++i)
    {
        LevelResult& lv = chain.levels[i - 1];
        lv.cert = certify_level(chain.branch, i, chain.fs[i - 1], chain.fs[i], lv.log, oracle_bound);
    }
    chain.table = valuation_table(chain.fs, chain.branch);
    chain.verified = true;
}

/// Builds a chain from externally supplied equations f_1, ..., f_r with
/// 1 <= r <= s (no logs).
inline LiftChain chain_from_equations(const ValidatedBranch& vb, std::vector<BiPoly> fs_without_f0)
{
    LiftChain chain;
    chain.branch = vb;
    chain.fs.push_back(BiPoly::y());
    for (auto& f : fs_without_f0)
        chain.fs.push_back(std::move(f));
    if (chain.fs.size() < 2 || chain.fs.size() > vb.cd.s() + 1)
        throw Error(Errc::IndexOutOfRange, "expected 1.." + std::to_string(vb.cd.s()) + " equations");
    for (std::size_t i = 1; i < chain.fs.size(); ++i)
    {
        LevelResult lv;
        lv.level = i;
        lv.f = chain.fs[i];
        lv.delta = chain.fs[i] - pow(chain.fs[i - 1], static_cast<unsigned>(vb.cd.k_at(i)));
        chain.levels.push_back(std::move(lv));
    }
    return chain;
}

/// f_1, ..., f_s for a validated branch. f_s approximates the branch equation
/// with the same multiplicity and characteristic exponents.
inline LiftChain implicitize_all(const ValidatedBranch& vb, const LiftOptions& opts = {},
                                 std::optional<std::size_t> up_to = std::nullopt)
{
    const std::size_t s = up_to ? std::min(*up_to, vb.cd.s()) : vb.cd.s();
    LiftChain chain;
    chain.branch = vb;
    chain.fs.push_back(BiPoly::y());
    for (std::size_t i = 1; i <= s; ++i)
    {
        auto t0 = std::chrono::steady_clock::now();
        LiftResult r = lift(chain.fs, vb, i, opts.pivot);
        auto t1 = std::chrono::steady_clock::now();
        LevelResult lv;
        lv.level = i;
        lv.f = r.f;
        lv.delta = std::move(r.delta);
        lv.log = std::move(r.log);
        lv.seconds = std::chrono::duration<double>(t1 - t0).count();
        chain.fs.push_back(std::move(r.f));
        chain.levels.push_back(std::move(lv));
    }
    if (opts.verify)
        certify(chain, opts.oracle_bound);
    return chain;
}

} // namespace branchlift

#endif // BRANCHLIFT_IMPLICITIZE_HPP
