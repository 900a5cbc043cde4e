#ifndef BRANCHLIFT_CURVE_FILE_HPP
#define BRANCHLIFT_CURVE_FILE_HPP

// Plain-text curve description, one branch per file:
//
//   # comment
//   name: example
//   notes: anything
//   k: 12
//   terms:
//     18  1
//     20  -1/3
//     23  5      level=3
//
// A term exponent is a t-exponent, or x^p/q which is scaled by k. When k is
// omitted and every term uses x^p/q, k is the lcm of the denominators.

#include <branchlift/chardata.hpp>

#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace branchlift
{

struct CurveTerm
{
    Exp exp = 0;
    Rat coeff;
    std::optional<std::size_t> level;
    std::size_t line = 0;
};

struct CurveFile
{
    std::string name;
    std::string notes;
    Exp k = 0;
    std::vector<CurveTerm> terms;

    BranchInput branch() const
    {
        BranchInput b;
        b.k = k;
        for (const auto& t : terms)
        {
            b.terms.emplace(t.exp, t.coeff);
            if (t.level)
                b.declared_levels.emplace(t.exp, *t.level);
        }
        return b;
    }
};

namespace detail
{

inline std::string trim(std::string_view s)
{
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos)
        return {};
    const auto b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

[[noreturn]] inline void parse_fail(const std::string& source, std::size_t line, const std::string& what)
{
    throw Error(Errc::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

inline Exp parse_int(const std::string& tok, const std::string& source, std::size_t line, const char* what)
{
    std::size_t used = 0;
    long long v = 0;
    try
    {
        v = std::stoll(tok, &used);
    }
    catch (const std::exception&)
    {
        parse_fail(source, line, std::string("bad ") + what + " '" + tok + "'");
    }
    if (used != tok.size())
        parse_fail(source, line, std::string("bad ") + what + " '" + tok + "'");
    return static_cast<Exp>(v);
}

} // namespace detail

inline CurveFile parse_curve(std::istream& in, const std::string& source = "<input>")
{
    CurveFile cf;
    bool have_k = false;
    bool in_terms = false;
    // x^p/q exponents wait until k is known
    struct Pending
    {
        std::size_t index;
        Rat x_exp;
    };
    std::vector<Pending> pending;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw))
    {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;

        const auto colon = line.find(':');
        if (colon != std::string::npos && line.substr(0, 2) != "x^")
        {
            const std::string key = detail::trim(line.substr(0, colon));
            const std::string value = detail::trim(line.substr(colon + 1));
            in_terms = false;
            if (key == "name")
                cf.name = value;
            else if (key == "notes")
                cf.notes = value;
            else if (key == "k")
            {
                cf.k = detail::parse_int(value, source, lineno, "multiplicity");
                if (cf.k < 1)
                    detail::parse_fail(source, lineno, "k must be a positive integer");
                have_k = true;
            }
            else if (key == "terms")
            {
                if (!value.empty())
                    detail::parse_fail(source, lineno, "terms: takes no value");
                in_terms = true;
            }
            else
                detail::parse_fail(source, lineno, "unknown key '" + key + "'");
            continue;
        }
        if (!in_terms)
            detail::parse_fail(source, lineno, "expected 'key: value' or a term inside 'terms:'");

        std::istringstream ls(line);
        std::string exp_tok, coeff_tok, extra;
        ls >> exp_tok >> coeff_tok;
        if (coeff_tok.empty())
            detail::parse_fail(source, lineno, "term needs an exponent and a coefficient");
        CurveTerm t;
        t.line = lineno;
        try
        {
            t.coeff = parse_rat(coeff_tok);
        }
        catch (const Error&)
        {
            detail::parse_fail(source, lineno, "bad coefficient '" + coeff_tok + "'");
        }
        if (t.coeff == 0)
            detail::parse_fail(source, lineno, "zero coefficient");
        while (ls >> extra)
        {
            if (extra.rfind("level=", 0) != 0)
                detail::parse_fail(source, lineno, "unexpected '" + extra + "'");
            const Exp lv = detail::parse_int(extra.substr(6), source, lineno, "level");
            if (lv < 1)
                detail::parse_fail(source, lineno, "level must be positive");
            t.level = static_cast<std::size_t>(lv);
        }
        if (exp_tok.rfind("x^", 0) == 0)
        {
            Rat q;
            try
            {
                q = parse_rat(exp_tok.substr(2));
            }
            catch (const Error&)
            {
                detail::parse_fail(source, lineno, "bad x-exponent '" + exp_tok + "'");
            }
            if (q <= 0)
                detail::parse_fail(source, lineno, "x-exponent must be positive");
            pending.push_back({cf.terms.size(), q});
        }
        else
        {
            t.exp = detail::parse_int(exp_tok, source, lineno, "exponent");
            if (t.exp < 1)
                detail::parse_fail(source, lineno, "exponent must be a positive integer");
        }
        cf.terms.push_back(t);
    }

    if (!have_k)
    {
        if (pending.empty() || pending.size() != cf.terms.size())
            detail::parse_fail(source, lineno, "missing 'k:'");
        cf.k = 1;
        for (const auto& p : pending)
            cf.k = std::lcm(cf.k, static_cast<Exp>(p.x_exp.get_den().get_si()));
    }
    for (const auto& p : pending)
    {
        Rat scaled = p.x_exp * Rat(cf.k);
        CurveTerm& t = cf.terms[p.index];
        if (!is_integer(scaled))
            detail::parse_fail(source, t.line, "x-exponent " + to_string(p.x_exp) + " is not in (1/k)Z");
        t.exp = scaled.get_num().get_si();
    }
    if (cf.terms.empty())
        detail::parse_fail(source, lineno, "no terms");
    for (std::size_t j = 1; j < cf.terms.size(); ++j)
        if (cf.terms[j].exp <= cf.terms[j - 1].exp)
            detail::parse_fail(source, cf.terms[j].line, "exponents must be strictly increasing");
    return cf;
}

inline CurveFile parse_curve_string(const std::string& text, const std::string& source = "<string>")
{
    std::istringstream in(text);
    return parse_curve(in, source);
}

inline CurveFile load_curve(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::ParseError, path + ": cannot open");
    return parse_curve(in, path);
}

/// Canonical text form; parse_curve_string(write_curve(cf)) == cf up to x^p/q.
inline std::string write_curve(const CurveFile& cf)
{
    std::ostringstream out;
    if (!cf.name.empty())
        out << "name: " << cf.name << "\n";
    if (!cf.notes.empty())
        out << "notes: " << cf.notes << "\n";
    out << "k: " << cf.k << "\nterms:\n";
    for (const auto& t : cf.terms)
    {
        out << "  " << t.exp << " " << to_string(t.coeff);
        if (t.level)
            out << " level=" << *t.level;
        out << "\n";
    }
    return out.str();
}

} // namespace branchlift

#endif // BRANCHLIFT_CURVE_FILE_HPP
