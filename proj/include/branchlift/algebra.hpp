#ifndef BRANCHLIFT_ALGEBRA_HPP
#define BRANCHLIFT_ALGEBRA_HPP

// Exact arithmetic kernel: rationals, sparse polynomials in t and in (x,y),
// and a fraction-free determinant over Q[x,y].

#include <branchlift/error.hpp>

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace branchlift
{

using Exp = std::int64_t;

/// Arbitrary-precision rational, always kept canonical (reduced, den > 0).
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1)
{
    if (den == 0)
        throw Error(Errc::ParseError, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p", "p/q" with optional surrounding blanks.
inline Rat parse_rat(std::string_view text)
{
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos)
        throw Error(Errc::ParseError, "empty rational");
    std::string s(text.substr(first, last - first + 1));
    if (s.front() == '+')
        s.erase(0, 1);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& d) {
        std::size_t i = (!d.empty() && d[0] == '-') ? 1 : 0;
        if (i >= d.size())
            return false;
        for (; i < d.size(); ++i)
            if (d[i] < '0' || d[i] > '9')
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw Error(Errc::ParseError, "malformed rational '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0)
        throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r)
{
    return r.get_str();
}

inline bool is_integer(const Rat& r)
{
    return r.get_den() == 1;
}

//------------------------------------------------------------------------------
/// A value in N_0 extended by +infinity. Used for orders, valuations and
/// deg_y of the zero polynomial; infinity is never encoded as a number.
class Order
{
public:
    constexpr Order(Exp v) : value_(v), infinite_(false) {}

    static constexpr Order infinity() { return Order(); }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    Exp value() const
    {
        if (infinite_)
            throw Error(Errc::IndexOutOfRange, "value() of an infinite order");
        return value_;
    }

    friend constexpr bool operator==(const Order& a, const Order& b)
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(const Order& a, const Order& b)
    {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    friend constexpr Order operator+(const Order& a, const Order& b)
    {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return Order(a.value_ + b.value_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Order& o)
    {
        if (o.infinite_)
            return os << "+inf";
        return os << o.value_;
    }

private:
    constexpr Order() : value_(0), infinite_(true) {}

    Exp value_;
    bool infinite_;
};

inline std::string to_string(const Order& o)
{
    std::ostringstream os;
    os << o;
    return os.str();
}

//------------------------------------------------------------------------------
namespace detail
{

template <class Map, class Key>
void add_into(Map& terms, const Key& key, const Rat& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted)
    {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

inline void append_coeff(std::string& out, const Rat& c, bool first, bool has_monomial)
{
    Rat mag = abs(c);
    if (first)
    {
        if (c < 0)
            out += "-";
    }
    else
        out += c < 0 ? " - " : " + ";
    if (!has_monomial)
    {
        out += mag.get_str();
        return;
    }
    if (mag != 1)
    {
        out += mag.get_str();
        out += "*";
    }
}

inline void append_power(std::string& out, char var, Exp e, bool& need_star)
{
    if (e == 0)
        return;
    if (need_star)
        out += "*";
    out += var;
    if (e != 1)
    {
        out += "^";
        out += std::to_string(e);
    }
    need_star = true;
}

} // namespace detail

//------------------------------------------------------------------------------
/// Sparse polynomial in t with rational coefficients. No zero coefficient is
/// ever stored, so the empty map is the zero polynomial.
class UniPoly
{
public:
    using Terms = std::map<Exp, Rat>;

    UniPoly() = default;

    static UniPoly monomial(Exp e, const Rat& c = Rat(1))
    {
        UniPoly p;
        p.add_term(e, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Order order() const
    {
        return terms_.empty() ? Order::infinity() : Order(terms_.begin()->first);
    }

    Order degree() const
    {
        return terms_.empty() ? Order::infinity() : Order(terms_.rbegin()->first);
    }

    Rat coeff(Exp e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(Exp e, const Rat& c)
    {
        if (e < 0)
            throw Error(Errc::NonIntegralExponent, "negative exponent in UniPoly");
        detail::add_into(terms_, e, c);
    }

    /// this += c * t^shift * other
    void add_scaled(const UniPoly& other, const Rat& c, Exp shift = 0)
    {
        if (c == 0)
            return;
        for (const auto& [e, a] : other.terms_)
            detail::add_into(terms_, e + shift, c * a);
    }

    UniPoly scaled(const Rat& c) const
    {
        UniPoly r;
        r.add_scaled(*this, c);
        return r;
    }

    UniPoly shifted(Exp s) const
    {
        UniPoly r;
        for (const auto& [e, a] : terms_)
            r.terms_.emplace_hint(r.terms_.end(), e + s, a);
        return r;
    }

    /// t -> t^m
    UniPoly substitute_power(Exp m) const
    {
        UniPoly r;
        for (const auto& [e, a] : terms_)
            r.terms_.emplace_hint(r.terms_.end(), e * m, a);
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b)
    {
        UniPoly r = a;
        r.add_scaled(b, Rat(1));
        return r;
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b)
    {
        UniPoly r = a;
        r.add_scaled(b, Rat(-1));
        return r;
    }

    friend UniPoly operator-(const UniPoly& a) { return a.scaled(Rat(-1)); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.size() > b.size())
            return b * a;
        UniPoly r;
        for (const auto& [e, c] : a.terms_)
            r.add_scaled(b, c, e);
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) { add_scaled(o, Rat(1)); return *this; }
    UniPoly& operator-=(const UniPoly& o) { add_scaled(o, Rat(-1)); return *this; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string(char var = 't') const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_)
        {
            detail::append_coeff(out, c, first, e != 0);
            bool star = false;
            detail::append_power(out, var, e, star);
            first = false;
        }
        return out;
    }

private:
    Terms terms_;
};

inline UniPoly pow(const UniPoly& base, unsigned n)
{
    UniPoly result = UniPoly::monomial(0);
    UniPoly b = base;
    while (n > 0)
    {
        if (n & 1u)
            result = result * b;
        n >>= 1;
        if (n > 0)
            b = b * b;
    }
    return result;
}

inline Order uni_order(const UniPoly& p) { return p.order(); }

//------------------------------------------------------------------------------
/// Exponent pair of x^x * y^y. Ordered by y first, then x, so that map
/// iteration runs in lex order with y > x.
struct Monomial
{
    Exp x = 0;
    Exp y = 0;

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
    friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.y <=> b.y; c != 0)
            return c;
        return a.x <=> b.x;
    }
};

/// Sparse polynomial in (x,y) over Q. Supp(f) is exactly the key set.
class BiPoly
{
public:
    using Terms = std::map<Monomial, Rat>;

    BiPoly() = default;

    static BiPoly monomial(Exp xe, Exp ye, const Rat& c = Rat(1))
    {
        BiPoly p;
        p.add_term(xe, ye, c);
        return p;
    }

    static BiPoly constant(const Rat& c) { return monomial(0, 0, c); }
    static BiPoly x() { return monomial(1, 0); }
    static BiPoly y() { return monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool contains(Exp xe, Exp ye) const { return terms_.count({xe, ye}) != 0; }

    Rat coeff(Exp xe, Exp ye) const
    {
        auto it = terms_.find({xe, ye});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(Exp xe, Exp ye, const Rat& c)
    {
        if (xe < 0 || ye < 0)
            throw Error(Errc::NonIntegralExponent, "negative exponent in BiPoly");
        detail::add_into(terms_, Monomial{xe, ye}, c);
    }

    /// this += c * x^sx * y^sy * other
    void add_scaled(const BiPoly& other, const Rat& c, Exp sx = 0, Exp sy = 0)
    {
        if (c == 0)
            return;
        for (const auto& [m, a] : other.terms_)
            detail::add_into(terms_, Monomial{m.x + sx, m.y + sy}, c * a);
    }

    BiPoly scaled(const Rat& c) const
    {
        BiPoly r;
        r.add_scaled(*this, c);
        return r;
    }

    /// deg_y; +infinity for the zero polynomial
    Order deg_y() const
    {
        return terms_.empty() ? Order::infinity() : Order(terms_.rbegin()->first.y);
    }

    Order deg_x() const
    {
        if (terms_.empty())
            return Order::infinity();
        Exp d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.x);
        return Order(d);
    }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
    }

    /// Leading term in lex order with y > x.
    std::pair<Monomial, Rat> leading() const
    {
        if (terms_.empty())
            throw Error(Errc::DegreeOutOfRange, "leading term of zero polynomial");
        return *terms_.rbegin();
    }

    /// Coefficient of y^b as a polynomial in x (returned as a BiPoly with y-degree 0).
    BiPoly coeff_y(Exp b) const
    {
        BiPoly r;
        for (auto it = terms_.lower_bound({0, b}); it != terms_.end() && it->first.y == b; ++it)
            r.terms_.emplace_hint(r.terms_.end(), Monomial{it->first.x, 0}, it->second);
        return r;
    }

    BiPoly d_dy() const
    {
        BiPoly r;
        for (const auto& [m, c] : terms_)
            if (m.y > 0)
                r.terms_.emplace_hint(r.terms_.end(), Monomial{m.x, m.y - 1}, c * Rat(m.y));
        return r;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b)
    {
        BiPoly r = a;
        r.add_scaled(b, Rat(1));
        return r;
    }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b)
    {
        BiPoly r = a;
        r.add_scaled(b, Rat(-1));
        return r;
    }

    friend BiPoly operator-(const BiPoly& a) { return a.scaled(Rat(-1)); }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b)
    {
        if (a.size() > b.size())
            return b * a;
        BiPoly r;
        for (const auto& [m, c] : a.terms_)
            r.add_scaled(b, c, m.x, m.y);
        return r;
    }

    BiPoly& operator+=(const BiPoly& o) { add_scaled(o, Rat(1)); return *this; }
    BiPoly& operator-=(const BiPoly& o) { add_scaled(o, Rat(-1)); return *this; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    /// Terms in lex order, y > x, descending; monomials written y^b*x^a.
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        {
            const auto& [m, c] = *it;
            detail::append_coeff(out, c, first, m.x != 0 || m.y != 0);
            bool star = false;
            detail::append_power(out, 'y', m.y, star);
            detail::append_power(out, 'x', m.x, star);
            first = false;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

private:
    Terms terms_;
};

inline BiPoly pow(const BiPoly& base, unsigned n)
{
    BiPoly result = BiPoly::constant(Rat(1));
    BiPoly b = base;
    while (n > 0)
    {
        if (n & 1u)
            result = result * b;
        n >>= 1;
        if (n > 0)
            b = b * b;
    }
    return result;
}

/// Exact quotient a / b in Q[x,y]; throws InexactDivision if b does not divide a.
inline BiPoly exact_quotient(const BiPoly& a, const BiPoly& b)
{
    if (b.is_zero())
        throw Error(Errc::InexactDivision, "division by zero polynomial");
    if (b.is_constant())
        return a.scaled(Rat(1) / b.terms().begin()->second);
    auto [lm, lc] = b.leading();
    Rat inv = Rat(1) / lc;
    BiPoly q;
    BiPoly rem = a;
    while (!rem.is_zero())
    {
        auto [rm, rc] = rem.leading();
        if (rm.x < lm.x || rm.y < lm.y)
            throw Error(Errc::InexactDivision, "divisor does not divide dividend");
        Rat t = rc * inv;
        q.add_term(rm.x - lm.x, rm.y - lm.y, t);
        rem.add_scaled(b, -t, rm.x - lm.x, rm.y - lm.y);
    }
    return q;
}

/// Substitution f(xt(t), yt(t)), expanded exactly.
inline UniPoly bipoly_compose(const BiPoly& f, const UniPoly& xt, const UniPoly& yt)
{
    UniPoly result;
    if (f.is_zero())
        return result;
    const bool x_monomial = xt.size() == 1;
    const Exp x_exp = x_monomial ? xt.terms().begin()->first : 0;
    const Rat x_coeff = x_monomial ? xt.terms().begin()->second : Rat(0);

    std::vector<UniPoly> x_powers{UniPoly::monomial(0)};
    auto x_power = [&](Exp a) -> UniPoly {
        if (x_monomial)
        {
            Rat c = 1;
            mpz_pow_ui(c.get_num_mpz_t(), x_coeff.get_num_mpz_t(), static_cast<unsigned long>(a));
            mpz_pow_ui(c.get_den_mpz_t(), x_coeff.get_den_mpz_t(), static_cast<unsigned long>(a));
            return UniPoly::monomial(x_exp * a, c);
        }
        while (static_cast<Exp>(x_powers.size()) <= a)
            x_powers.push_back(x_powers.back() * xt);
        return x_powers[static_cast<std::size_t>(a)];
    };

    UniPoly y_power = UniPoly::monomial(0);
    Exp y_level = 0;
    auto it = f.terms().begin();
    while (it != f.terms().end())
    {
        const Exp b = it->first.y;
        UniPoly in_x;
        for (; it != f.terms().end() && it->first.y == b; ++it)
            in_x.add_scaled(x_power(it->first.x), it->second);
        while (y_level < b)
        {
            y_power = y_power * yt;
            ++y_level;
        }
        result += in_x * y_power;
    }
    return result;
}

//------------------------------------------------------------------------------
using BiMatrix = std::vector<std::vector<BiPoly>>;

/// Determinant over Q[x,y] by fraction-free (Bareiss) elimination with row
/// pivoting; every intermediate division is exact.
inline BiPoly sylvester_det(BiMatrix m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw Error(Errc::IndexOutOfRange, "determinant of a non-square matrix");
    if (n == 0)
        return BiPoly::constant(Rat(1));

    bool negate = false;
    BiPoly prev = BiPoly::constant(Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (m[k][k].is_zero())
        {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero())
                ++r;
            if (r == n)
                return BiPoly();
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        const BiPoly& pivot = m[k][k];
        for (std::size_t i = k + 1; i < n; ++i)
        {
            const bool lead_zero = m[i][k].is_zero();
            for (std::size_t j = k + 1; j < n; ++j)
            {
                BiPoly v = m[i][j] * pivot;
                if (!lead_zero && !m[k][j].is_zero())
                    v -= m[i][k] * m[k][j];
                m[i][j] = v.is_zero() ? BiPoly() : exact_quotient(v, prev);
            }
            m[i][k] = BiPoly();
        }
        prev = m[k][k];
    }
    BiPoly det = std::move(m[n - 1][n - 1]);
    return negate ? -det : det;
}

} // namespace branchlift

#endif // BRANCHLIFT_ALGEBRA_HPP
