#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ydl/builders.hpp"
#include "ydl/io.hpp"
#include "ydl/qt_structures.hpp"
#include "ydl/suite_report.hpp"
#include "ydl/suites.hpp"

namespace {

using namespace ydl;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

struct CheckArgs
{
    std::string suite;
    std::vector<std::string> algebras;
    std::string r_path;
    std::string zeta_path;
    std::optional<int> variant;
    std::string report = "text";
    bool unchecked = false;
};

template <typename Scalar>
SuiteRun run_on(const CheckArgs& args, const HopfAlgebra<Scalar>& H, const std::string& key, const std::string& source)
{
    SuiteOptions<Scalar> o;
    o.variant = args.variant;
    o.catalog_key = key;
    o.unchecked = args.unchecked;
    if (!args.r_path.empty())
        o.r = r_element(H, to_matrix<Scalar>(read_coefficient_file(args.r_path, "R"), H.dim(), "R"));
    if (!args.zeta_path.empty())
        o.zeta = to_matrix<Scalar>(read_coefficient_file(args.zeta_path, "zeta"), H.dim(), "zeta");
    return render_run(run_suite(args.suite, H, o), H, source);
}

SuiteRun run_one(const CheckArgs& args, const std::string& spec)
{
    if (is_catalog_key(spec) && !std::filesystem::exists(spec))
        return run_on(args, catalog_algebra<Rational>(spec), spec, "catalog:" + spec);
    const auto file = read_algebra_file(spec);
    const std::string source = "file:" + std::filesystem::path(spec).filename().string();
    if (file.field.rational())
        return run_on(args, to_hopf<Rational>(file, false), "", source);
    ModP::Scope scope(file.field.prime);
    return run_on(args, to_hopf<ModP>(file, false), "", source);
}

int check(const CheckArgs& args)
{
    std::vector<std::string> specs;
    for (const auto& a : args.algebras)
    {
        if (a == "catalog")
            specs.insert(specs.end(), catalog_keys().begin(), catalog_keys().end());
        else
            specs.push_back(a);
    }
    if (specs.size() > 1 && (!args.r_path.empty() || !args.zeta_path.empty()))
        throw UsageError("--r and --zeta apply to a single algebra");
    std::vector<SuiteRun> runs;
    for (const auto& s : specs)
        runs.push_back(run_one(args, s));
    std::cout << (args.report == "machine" ? machine_report(args.suite, runs) : text_report(args.suite, runs));
    for (const auto& r : runs)
        if (!r.overall)
            return exit_fail;
    return exit_pass;
}

int export_algebra(const std::string& key, const std::string& field, const std::string& out)
{
    if (!is_catalog_key(key))
        throw UsageError("unknown catalog key \"" + key + "\"");
    const auto spec = FieldSpec::parse(field);
    std::string text;
    if (spec.rational())
        text = print_algebra(to_file(catalog_algebra<Rational>(key)));
    else
    {
        ModP::Scope scope(spec.prime);
        text = print_algebra(to_file(catalog_algebra<ModP>(key)));
    }
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
    return exit_pass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for Yetter-Drinfeld-Long bimodules over finite-dimensional Hopf algebras"};
    app.require_subcommand(1);

    CheckArgs args;
    auto* check_cmd = app.add_subcommand("check", "run a check suite");
    check_cmd->add_option("suite", args.suite, "suite to run")->required()->check(CLI::IsMember(suite_names()));
    check_cmd
        ->add_option("--algebra", args.algebras,
                     "algebra file or catalog key (k, c2, c3, c2xc2, s3, dual_s3, sweedler, c2_tensor_c2); "
                     "\"catalog\" runs every catalog algebra; repeatable")
        ->required();
    check_cmd->add_option("--r", args.r_path, "file holding an R-matrix")->check(CLI::ExistingFile);
    check_cmd->add_option("--zeta", args.zeta_path, "file holding a bilinear form")->check(CLI::ExistingFile);
    check_cmd->add_option("--variant", args.variant, "restrict to example module H1..H4")->check(CLI::Range(1, 4));
    check_cmd->add_option("--report", args.report, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    check_cmd->add_flag("--unchecked", args.unchecked, "do not gate on the Hopf axioms");

    std::string key, out, field = "rational";
    auto* export_cmd = app.add_subcommand("export", "print a catalog algebra in the file format");
    export_cmd->add_option("key", key, "catalog key")->required();
    export_cmd->add_option("--field", field, "\"rational\" or \"prime p\"");
    export_cmd->add_option("-o,--out", out, "write to this file instead of stdout");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e) == 0 ? exit_pass : exit_input;
    }

    try
    {
        if (check_cmd->parsed())
            return check(args);
        return export_algebra(key, field, out);
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
