#ifndef BRANCHLIFT_CLI_HPP
#define BRANCHLIFT_CLI_HPP

// Report commands behind the branchlift executable. Each writes either a
// text report or a JSON document to `out` and returns the exit status.

#include <branchlift/curve_file.hpp>
#include <branchlift/implicitize.hpp>

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace branchlift::cli
{

using Json = nlohmann::ordered_json;

struct Options
{
    std::optional<std::size_t> level;
    bool json = false;
    bool verify = true;
    bool lenient = false;
    std::size_t oracle_bound = default_oracle_bound;
    PivotPolicy pivot = PivotPolicy::LexSmallest;
};

inline constexpr const char* check_mark = "✓";
inline constexpr const char* cross_mark = "✗";

inline const char* mark(bool ok) { return ok ? check_mark : cross_mark; }

//------------------------------------------------------------------------------
// JSON encoding

inline Json order_json(const Order& o)
{
    if (o.is_infinite())
        return "+inf";
    return o.value();
}

/// [[alpha, beta, "c"], ...] in the same order as BiPoly::to_string.
inline Json poly_json(const BiPoly& f)
{
    Json arr = Json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        arr.push_back(Json::array({it->first.x, it->first.y, to_string(it->second)}));
    return arr;
}

inline BiPoly poly_from_json(const Json& arr)
{
    BiPoly f;
    for (const auto& t : arr)
    {
        if (!t.is_array() || t.size() != 3)
            throw Error(Errc::ParseError, "polynomial term must be [alpha, beta, \"coeff\"]");
        f.add_term(t[0].get<Exp>(), t[1].get<Exp>(), parse_rat(t[2].get<std::string>()));
    }
    return f;
}

inline Json vec_json(const std::vector<Rat>& v)
{
    Json arr = Json::array();
    for (const auto& r : v)
        arr.push_back(to_string(r));
    return arr;
}

inline Json curve_json(const CurveFile& cf)
{
    Json terms = Json::array();
    for (const auto& t : cf.terms)
    {
        Json j{{"exp", t.exp}, {"coeff", to_string(t.coeff)}};
        if (t.level)
            j["level"] = *t.level;
        terms.push_back(j);
    }
    return Json{{"name", cf.name}, {"notes", cf.notes}, {"k", cf.k}, {"terms", terms}};
}

inline CurveFile curve_from_json(const Json& j)
{
    CurveFile cf;
    cf.name = j.value("name", "");
    cf.notes = j.value("notes", "");
    cf.k = j.at("k").get<Exp>();
    std::size_t idx = 0;
    for (const auto& t : j.at("terms"))
    {
        CurveTerm ct;
        ct.exp = t.at("exp").get<Exp>();
        ct.coeff = parse_rat(t.at("coeff").get<std::string>());
        if (t.contains("level"))
            ct.level = t.at("level").get<std::size_t>();
        ct.line = ++idx;
        cf.terms.push_back(ct);
    }
    return cf;
}

inline Json chardata_json(const CharData& cd)
{
    return Json{{"k", cd.k}, {"lambdas", vec_json(cd.lambdas)}, {"ks", cd.ks}, {"es", cd.es}};
}

inline Json log_json(const std::vector<Iteration>& log)
{
    Json arr = Json::array();
    for (const auto& it : log)
        arr.push_back(Json{{"n", it.n}, {"pivot", it.pivot}, {"coeff", to_string(it.coefficient)},
                           {"slice_size", it.slice_size}});
    return arr;
}

inline std::vector<Iteration> log_from_json(const Json& arr)
{
    std::vector<Iteration> log;
    for (const auto& j : arr)
        log.push_back({j.at("n").get<Exp>(), j.at("pivot").get<IntVec>(), parse_rat(j.at("coeff").get<std::string>()),
                       j.at("slice_size").get<std::size_t>()});
    return log;
}

inline Json level_cert_json(const LevelResult& lv)
{
    const LevelCertificate& c = lv.cert;
    return Json{{"level", lv.level},
                {"pullback_vanishes", c.pullback_vanishes},
                {"monic_weierstrass", c.monic_weierstrass},
                {"support_in_polygon", c.support_in_polygon},
                {"delta_avoids_apex", c.delta_avoids_apex},
                {"compact_face", c.compact_face},
                {"log_increasing", c.log_increasing},
                {"log_in_semigroup", c.log_in_semigroup},
                {"oracle", std::string(oracle_status_name(c.oracle))},
                {"pass", c.pass()}};
}

inline Json table_json(const ValuationTable& t)
{
    Json arr = Json::array();
    for (const auto& c : t.cells)
        arr.push_back(Json{{"i", c.i},
                           {"j", c.j},
                           {"value", order_json(c.value)},
                           {"expected", c.expected},
                           {"dy_value", order_json(c.dy_value)},
                           {"dy_expected", c.dy_expected},
                           {"ok", c.ok()}});
    return arr;
}

/// The timing-free verdict of a chain; identical across reruns.
inline Json certificates_json(const LiftChain& chain)
{
    Json levels = Json::array();
    for (const auto& lv : chain.levels)
        levels.push_back(level_cert_json(lv));
    return Json{{"verified", chain.verified},
                {"levels", levels},
                {"valuation_table", table_json(chain.table)},
                {"all_pass", chain.all_pass()}};
}

inline Json chain_json(const CurveFile& cf, const LiftChain& chain)
{
    Json levels = Json::array();
    for (const auto& lv : chain.levels)
        levels.push_back(Json{{"level", lv.level},
                              {"e", chain.branch.cd.e(lv.level)},
                              {"f", poly_json(lv.f)},
                              {"delta", poly_json(lv.delta)},
                              {"f_text", lv.f.to_string()},
                              {"iterations", lv.log.size()},
                              {"log", log_json(lv.log)},
                              {"seconds", lv.seconds}});
    Json doc{{"curve", curve_json(cf)}, {"characteristic", chardata_json(chain.branch.cd)}, {"levels", levels}};
    if (chain.verified)
        doc["certificates"] = certificates_json(chain);
    return doc;
}

//------------------------------------------------------------------------------
// Text helpers

inline std::string rat_list(const std::vector<Rat>& v)
{
    std::string s = "(";
    for (std::size_t j = 0; j < v.size(); ++j)
        s += (j ? ", " : "") + to_string(v[j]);
    return s + ")";
}

template <class T>
std::string int_list(const std::vector<T>& v)
{
    std::string s = "(";
    for (std::size_t j = 0; j < v.size(); ++j)
        s += (j ? ", " : "") + std::to_string(v[j]);
    return s + ")";
}

/// "(e; gamma_1, ..., gamma_i)"
inline std::string generator_row(const SemigroupDesc& sd)
{
    const auto g = sd.scalar_generators();
    std::string s = "(" + std::to_string(g[0]) + ";";
    for (std::size_t j = 1; j < g.size(); ++j)
        s += (j > 1 ? ", " : " ") + std::to_string(g[j]);
    return s + ")";
}

inline std::string valuation_line(const ValuationCell& c, bool derivative)
{
    const std::string i = std::to_string(c.i), j = std::to_string(c.j);
    const Order v = derivative ? c.dy_value : c.value;
    const Exp want = derivative ? c.dy_expected : c.expected;
    std::string s = "ϑ_{ι_" + j + "}(" + (derivative ? "∂_y f_" : "f_") + std::to_string(c.i - 1) +
                    ") = " + to_string(v) + (v == Order(want) ? " = " : " ≠ " + std::to_string(want) + " = ") +
                    "γ_" + i + "^{(" + j + ")}";
    if (derivative)
        s += " - e_" + j + "λ_" + i;
    return s + " " + mark(v == Order(want));
}

inline void write_level_certs(std::ostream& out, const LiftChain& chain, const LevelResult& lv,
                              std::size_t oracle_bound)
{
    const std::string i = std::to_string(lv.level);
    const CharData& cd = chain.branch.cd;
    const LevelCertificate& c = lv.cert;
    const Exp e = cd.e(lv.level);
    const Exp apex = Rat(cd.lambda(1) * Rat(e)).get_num().get_si();
    out << "  ι_" << i << "^*f_" << i << " = 0 " << mark(c.pullback_vanishes) << "\n";
    out << "  f_" << i << " Weierstrass, monic of degree e_" << i << " = " << e << " in y "
        << mark(c.monic_weierstrass) << "\n";
    out << "  Supp(f_" << i << ") ⊆ N_" << i << " " << mark(c.support_in_polygon) << "\n";
    out << "  Supp(δ_" << i << ") ⊆ N_" << i << " \\ {(0," << e << ")} " << mark(c.delta_avoids_apex)
        << "\n";
    out << "  {(0," << e << "),(" << apex << ",0)} ⊆ Supp(f_" << i << ") " << mark(c.compact_face) << "\n";
    if (!lv.log.empty())
        out << "  elimination log strictly increasing in Γ " << mark(c.log_increasing && c.log_in_semigroup)
            << "\n";
    if (c.oracle == OracleStatus::Skipped)
        out << "  resultant oracle skipped (e_" << i << " = " << e << " > " << oracle_bound << ")\n";
    else
        out << "  resultant oracle " << oracle_status_name(c.oracle) << " "
            << mark(c.oracle == OracleStatus::Matched) << "\n";
}

inline void write_table(std::ostream& out, const ValuationTable& t)
{
    out << "valuations:\n";
    for (const auto& c : t.cells)
    {
        out << "  " << valuation_line(c, false) << "\n";
        out << "  " << valuation_line(c, true) << "\n";
    }
}

inline ValidatedBranch load_branch(const CurveFile& cf, const Options& opt)
{
    return validate_branch(cf.branch(), opt.lenient);
}

inline std::string display_name(const CurveFile& cf)
{
    return cf.name.empty() ? std::string("(unnamed)") : cf.name;
}

//------------------------------------------------------------------------------
// Commands

inline int cmd_validate(const CurveFile& cf, const Options& opt, std::ostream& out)
{
    const ValidatedBranch vb = load_branch(cf, opt);
    const CharData& cd = vb.cd;
    if (opt.json)
    {
        Json levels = Json::array();
        for (std::size_t i = 1; i <= cd.s(); ++i)
        {
            Json tail = Json::array();
            for (const auto& [e, c] : vb.tail(i).terms())
                tail.push_back(Json::array({e, to_string(c)}));
            levels.push_back(Json{{"level", i}, {"c", to_string(vb.c_at(i))}, {"phi", tail}});
        }
        out << Json{{"curve", curve_json(cf)},
                    {"characteristic", chardata_json(cd)},
                    {"levels", levels},
                    {"warnings", vb.warnings},
                    {"valid", true}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "branch " << display_name(cf) << "\n";
    out << "k = " << cd.k << ", s = " << cd.s() << "\n";
    out << "lambda = " << rat_list(cd.lambdas) << "\n";
    out << "k_i = " << int_list(cd.ks) << "\n";
    out << "e_i = " << int_list(cd.es) << "\n";
    for (std::size_t i = 1; i <= cd.s(); ++i)
        out << "level " << i << ": c_" << i << " = " << to_string(vb.c_at(i)) << " at t^" << cd.char_exponent(i)
            << ", phi_" << i << " = " << vb.tail(i).to_string('t') << "\n";
    for (const auto& w : vb.warnings)
        out << "warning: " << w << "\n";
    out << "valid\n";
    return 0;
}

inline int cmd_semigroup(const CurveFile& cf, const Options& opt, std::ostream& out)
{
    const ValidatedBranch vb = load_branch(cf, opt);
    const CharData& cd = vb.cd;
    bool ok = true;
    Json rows = Json::array();
    std::ostringstream text;
    for (std::size_t i = 1; i <= cd.s(); ++i)
    {
        const SemigroupDesc sd = generators(cd, i);
        const IdentityReport rep = identity_suite(sd, cd);
        ok = ok && rep.all_pass();
        Json checks = Json::array();
        text << "Gamma_" << i << " = " << generator_row(sd) << "  conductor bound "
             << conductor_bound(sd, i).at(0) << "\n";
        for (const auto& c : rep.checks)
        {
            checks.push_back(Json{{"name", c.name}, {"index", c.index}, {"pass", c.pass}, {"detail", c.detail}});
            text << "  (" << c.name << ") j=" << c.index << ": " << c.detail << " " << mark(c.pass) << "\n";
        }
        rows.push_back(Json{{"level", i},
                            {"e", sd.e},
                            {"generators", sd.scalar_generators()},
                            {"conductor_bound", conductor_bound(sd, i).at(0)},
                            {"identities", checks}});
    }
    if (opt.json)
        out << Json{{"curve", curve_json(cf)}, {"semigroups", rows}, {"all_pass", ok}}.dump(2) << "\n";
    else
        out << text.str();
    return ok ? 0 : 1;
}

inline int cmd_polygon(const CurveFile& cf, const Options& opt, std::ostream& out)
{
    const ValidatedBranch vb = load_branch(cf, opt);
    const std::size_t s = vb.cd.s();
    std::size_t lo = 1, hi = s;
    if (opt.level)
    {
        if (*opt.level < 1 || *opt.level > s)
            throw Error(Errc::IndexOutOfRange, "level " + std::to_string(*opt.level) + " outside 1.." +
                                                   std::to_string(s));
        lo = hi = *opt.level;
    }
    Json arr = Json::array();
    for (std::size_t i = lo; i <= hi; ++i)
    {
        const PolygonDesc pd = make_polygon(vb, i);
        Json verts = Json::array();
        for (auto [a, b] : pd.vertices())
            verts.push_back(Json::array({a, b}));
        arr.push_back(Json{{"level", i},
                           {"e", pd.e},
                           {"lambda1", to_string(pd.lambda1)},
                           {"mu", to_string(pd.mu)},
                           {"lower", Json::array({pd.lower.a, pd.lower.b, pd.lower.c})},
                           {"upper", Json::array({pd.upper.a, pd.upper.b, pd.upper.c})},
                           {"vertices", verts}});
        if (opt.json)
            continue;
        out << "N_" << i << ": e_" << i << " = " << pd.e << ", lambda_1 = " << to_string(pd.lambda1)
            << ", mu_" << i << " = " << to_string(pd.mu) << "\n";
        out << "  " << pd.lower.a << "*alpha + " << pd.lower.b << "*beta >= " << pd.lower.c << "\n";
        out << "  " << pd.upper.a << "*alpha + " << pd.upper.b << "*beta <= " << pd.upper.c << "\n";
        out << "  vertices:";
        for (auto [a, b] : pd.vertices())
            out << " (" << a << "," << b << ")";
        out << "\n";
    }
    if (opt.json)
        out << Json{{"curve", curve_json(cf)}, {"polygons", arr}}.dump(2) << "\n";
    return 0;
}

inline int cmd_implicitize(const CurveFile& cf, const Options& opt, std::ostream& out)
{
    const ValidatedBranch vb = load_branch(cf, opt);
    const LiftChain chain = implicitize_all(vb, {opt.pivot, opt.verify, opt.oracle_bound}, opt.level);
    if (opt.json)
    {
        out << chain_json(cf, chain).dump(2) << "\n";
        return !opt.verify || chain.all_pass() ? 0 : 1;
    }
    out << "branch " << display_name(cf) << "  (k = " << vb.cd.k << ", lambda = " << rat_list(vb.cd.lambdas)
        << ")\n";
    for (const auto& lv : chain.levels)
    {
        const std::string i = std::to_string(lv.level);
        out << "f_" << i << " = " << lv.f << "\n";
        out << "  delta_" << i << " = " << lv.delta << "\n";
        out << "  " << lv.log.size() << " iterations, " << lv.f.terms().size() << " terms, " << std::fixed
            << std::setprecision(4) << lv.seconds << " s\n";
        out.unsetf(std::ios::floatfield);
        if (chain.verified)
            write_level_certs(out, chain, lv, opt.oracle_bound);
    }
    if (!chain.verified)
        return 0;
    write_table(out, chain.table);
    out << (chain.all_pass() ? "all certificates pass" : "CERTIFICATE FAILURE") << "\n";
    return chain.all_pass() ? 0 : 1;
}

/// Certifies either a fresh computation from a curve file or the equations
/// stored in an `implicitize --json` document.
inline int cmd_verify_chain(const CurveFile& cf, LiftChain& chain, const Options& opt, std::ostream& out)
{
    if (!chain.verified)
        certify(chain, opt.oracle_bound);
    bool ok = chain.all_pass();
    std::vector<IdentityReport> identities;
    for (std::size_t i = 1; i <= chain.branch.cd.s(); ++i)
    {
        identities.push_back(identity_suite(generators(chain.branch.cd, i), chain.branch.cd));
        ok = ok && identities.back().all_pass();
    }
    if (opt.json)
    {
        Json doc{{"curve", curve_json(cf)}, {"certificates", certificates_json(chain)}};
        doc["semigroup_identities"] = Json::array();
        for (const auto& rep : identities)
            doc["semigroup_identities"].push_back(rep.all_pass());
        doc["all_pass"] = ok;
        out << doc.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    out << "branch " << display_name(cf) << "\n";
    for (std::size_t i = 1; i <= identities.size(); ++i)
        out << "semigroup identities, level " << i << " "
            << generator_row(generators(chain.branch.cd, i)) << " " << mark(identities[i - 1].all_pass()) << "\n";
    for (const auto& lv : chain.levels)
    {
        out << "level " << lv.level << ":\n";
        write_level_certs(out, chain, lv, opt.oracle_bound);
    }
    write_table(out, chain.table);
    out << (ok ? "all certificates pass" : "CERTIFICATE FAILURE") << "\n";
    return ok ? 0 : 1;
}

inline int cmd_verify(const CurveFile& cf, const Options& opt, std::ostream& out)
{
    Options o = opt;
    o.verify = true;
    LiftChain chain = implicitize_all(load_branch(cf, o), {o.pivot, true, o.oracle_bound}, o.level);
    return cmd_verify_chain(cf, chain, o, out);
}

inline int cmd_verify_json(const Json& doc, const Options& opt, std::ostream& out)
{
    const CurveFile cf = curve_from_json(doc.at("curve"));
    const ValidatedBranch vb = load_branch(cf, opt);
    std::vector<BiPoly> fs;
    std::vector<std::vector<Iteration>> logs;
    for (const auto& lv : doc.at("levels"))
    {
        fs.push_back(poly_from_json(lv.at("f")));
        logs.push_back(lv.contains("log") ? log_from_json(lv.at("log")) : std::vector<Iteration>{});
    }
    LiftChain chain = chain_from_equations(vb, std::move(fs));
    for (std::size_t i = 0; i < logs.size(); ++i)
        chain.levels[i].log = std::move(logs[i]);
    return cmd_verify_chain(cf, chain, opt, out);
}

inline bool looks_like_json(const std::string& path)
{
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return true;
    std::ifstream in(path);
    char c = 0;
    while (in.get(c))
        if (!std::isspace(static_cast<unsigned char>(c)))
            return c == '{';
    return false;
}

inline int cmd_verify_path(const std::string& path, const Options& opt, std::ostream& out)
{
    if (!looks_like_json(path))
        return cmd_verify(load_curve(path), opt, out);
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::ParseError, path + ": cannot open");
    Json doc;
    try
    {
        doc = Json::parse(in);
    }
    catch (const nlohmann::json::exception& e)
    {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
    return cmd_verify_json(doc, opt, out);
}

//------------------------------------------------------------------------------
struct BenchLevel
{
    std::size_t level = 0;
    Exp e = 0;
    std::size_t iterations = 0;
    std::size_t terms = 0;
    double seconds = 0;
};

struct BenchEntry
{
    std::string file;
    std::string name;
    std::vector<BenchLevel> levels;
    bool verified = false;
    bool pass = false;
    double total_seconds = 0;
};

inline std::vector<std::string> corpus_files(const std::string& dir)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw Error(Errc::ParseError, dir + ": not a directory");
    std::vector<std::string> files;
    for (const auto& ent : fs::directory_iterator(dir))
        if (ent.is_regular_file() && ent.path().extension() == ".curve")
            files.push_back(ent.path().string());
    std::sort(files.begin(), files.end());
    return files;
}

inline BenchEntry bench_one(const std::string& path, const Options& opt)
{
    const CurveFile cf = load_curve(path);
    const ValidatedBranch vb = load_branch(cf, opt);
    auto t0 = std::chrono::steady_clock::now();
    const LiftChain chain = implicitize_all(vb, {opt.pivot, opt.verify, opt.oracle_bound}, opt.level);
    auto t1 = std::chrono::steady_clock::now();
    BenchEntry b;
    b.file = std::filesystem::path(path).filename().string();
    b.name = display_name(cf);
    b.verified = chain.verified;
    b.pass = chain.all_pass();
    b.total_seconds = std::chrono::duration<double>(t1 - t0).count();
    for (const auto& lv : chain.levels)
        b.levels.push_back({lv.level, vb.cd.e(lv.level), lv.log.size(), lv.f.terms().size(), lv.seconds});
    return b;
}

inline int cmd_bench(const std::string& dir, const Options& opt, std::ostream& out)
{
    std::vector<BenchEntry> entries;
    for (const auto& f : corpus_files(dir))
        entries.push_back(bench_one(f, opt));
    bool ok = true;
    for (const auto& b : entries)
        ok = ok && (!b.verified || b.pass);

    if (opt.json)
    {
        Json arr = Json::array();
        for (const auto& b : entries)
        {
            Json levels = Json::array();
            for (const auto& l : b.levels)
                levels.push_back(Json{{"level", l.level},
                                      {"e", l.e},
                                      {"iterations", l.iterations},
                                      {"terms", l.terms},
                                      {"seconds", l.seconds}});
            arr.push_back(Json{{"file", b.file},
                               {"name", b.name},
                               {"levels", levels},
                               {"verified", b.verified},
                               {"pass", b.pass},
                               {"total_seconds", b.total_seconds}});
        }
        out << Json{{"entries", arr}, {"all_pass", ok}}.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    out << std::left << std::setw(32) << "file" << std::right << std::setw(6) << "level" << std::setw(6) << "e_i"
        << std::setw(12) << "iterations" << std::setw(8) << "terms" << std::setw(12) << "seconds"
        << "  certs\n";
    for (const auto& b : entries)
        for (const auto& l : b.levels)
        {
            out << std::left << std::setw(32) << b.file << std::right << std::setw(6) << l.level << std::setw(6)
                << l.e << std::setw(12) << l.iterations << std::setw(8) << l.terms << std::setw(12) << std::fixed
                << std::setprecision(4) << l.seconds << "  "
                << (l.level == b.levels.back().level ? (b.verified ? (b.pass ? "pass" : "FAIL") : "skipped") : "")
                << "\n";
            out.unsetf(std::ios::floatfield);
        }
    return ok ? 0 : 1;
}

} // namespace branchlift::cli

#endif // BRANCHLIFT_CLI_HPP
