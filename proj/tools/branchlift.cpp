// branchlift: implicit equations of plane-branch truncations.

#include <branchlift/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace branchlift;

int main(int argc, char** argv)
{
    CLI::App app{"Implicit equations of the truncations of a plane curve branch"};
    app.require_subcommand(1);

    cli::Options opt;
    std::string path;
    std::size_t level = 0;
    std::string pivot = "smallest";

    auto common = [&](CLI::App* sub, bool with_level) {
        sub->add_flag("--json", opt.json, "Write a JSON document instead of text");
        sub->add_flag("--lenient", opt.lenient, "Re-split tails that overrun the next characteristic term");
        sub->add_option("--oracle-bound", opt.oracle_bound, "Largest e_i checked against the resultant")
            ->check(CLI::PositiveNumber);
        if (with_level)
            sub->add_option("--level", level, "Restrict to one level (polygon) or stop at it (implicitize)")
                ->check(CLI::PositiveNumber);
    };

    auto* validate = app.add_subcommand("validate", "Check a curve file and print its characteristic data");
    validate->add_option("file", path, "Curve file")->required();
    common(validate, false);

    auto* semigroup = app.add_subcommand("semigroup", "Semigroup generators and identity checks per level");
    semigroup->add_option("file", path, "Curve file")->required();
    common(semigroup, false);

    auto* polygon = app.add_subcommand("polygon", "Support polygon N_i: inequalities and vertices");
    polygon->add_option("file", path, "Curve file")->required();
    common(polygon, true);

    auto* implicitize = app.add_subcommand("implicitize", "Compute f_1, ..., f_s with certificates");
    implicitize->add_option("file", path, "Curve file")->required();
    implicitize->add_flag("--no-verify", [&](std::int64_t) { opt.verify = false; }, "Skip certificates");
    implicitize->add_option("--pivot", pivot, "Slice pivot rule")->check(CLI::IsMember({"smallest", "largest"}));
    common(implicitize, true);

    auto* verify = app.add_subcommand("verify", "Full certificate suite for a curve file or implicitize JSON");
    verify->add_option("file", path, "Curve file or JSON document")->required();
    common(verify, true);

    auto* bench = app.add_subcommand("bench", "Per-level iteration counts and wall times over a directory");
    bench->add_option("dir", path, "Directory of .curve files")->required();
    bench->add_flag("--no-verify", [&](std::int64_t) { opt.verify = false; }, "Skip certificates");
    common(bench, true);

    CLI11_PARSE(app, argc, argv);
    if (level > 0)
        opt.level = level;
    opt.pivot = pivot == "largest" ? PivotPolicy::LexLargest : PivotPolicy::LexSmallest;

    try
    {
        if (*validate)
            return cli::cmd_validate(load_curve(path), opt, std::cout);
        if (*semigroup)
            return cli::cmd_semigroup(load_curve(path), opt, std::cout);
        if (*polygon)
            return cli::cmd_polygon(load_curve(path), opt, std::cout);
        if (*implicitize)
            return cli::cmd_implicitize(load_curve(path), opt, std::cout);
        if (*verify)
            return cli::cmd_verify_path(path, opt, std::cout);
        if (*bench)
            return cli::cmd_bench(path, opt, std::cout);
    }
    catch (const Error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
