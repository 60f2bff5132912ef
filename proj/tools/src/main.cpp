#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linkform/errors.hpp"
#include "linkform_cli/fixture.hpp"
#include "linkform_cli/report.hpp"

namespace {

using namespace linkform;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

std::vector<std::string> split_csv(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

SimplicialComplex generate(const std::string& kind, const std::vector<std::string>& params)
{
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw ValidationError(kind + " takes " + std::to_string(n) + " parameter(s)");
    };
    auto number = [](const std::string& s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ValidationError("expected an integer, got '" + s + "'");
        }
    };
    if (kind == "sphere") {
        need(1);
        return sphere(number(params[0]));
    }
    if (kind == "rp") {
        need(1);
        return rp_space(number(params[0]));
    }
    if (kind == "lens") {
        need(2);
        return lens_space(number(params[0]), number(params[1]));
    }
    if (kind == "suspension") {
        need(1);
        return suspension(cli::resolve_complex(params[0]));
    }
    if (kind == "product") {
        need(2);
        return product(cli::resolve_complex(params[0]), cli::resolve_complex(params[1]));
    }
    throw ValidationError("unknown kind '" + kind + "' (sphere, suspension, product, rp, lens)");
}

void emit(const cli::Json& doc, bool pretty)
{
    std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology operations, Bockstein spectral sequences and linking forms of triangulated manifolds"};
    app.set_version_flag("--version", std::string(cli::tool_version));
    app.require_subcommand(1);

    std::string kind, out_path;
    std::vector<std::string> params;
    auto* gen = app.add_subcommand("generate", "Write a generated complex as JSON");
    gen->add_option("kind", kind, "sphere, suspension, product, rp or lens")->required();
    gen->add_option("params", params, "Integers, or complex files / expressions for suspension and product");
    gen->add_option("-o,--out", out_path, "Output file; standard output when omitted");

    std::string complex_spec, sections_csv;
    int n_max = 3;
    std::uint64_t seed = 0;
    bool pretty = false;
    auto* rep = app.add_subcommand("report", "Print a JSON report");
    rep->add_option("complex,--complex", complex_spec, "Complex file or expression such as rp(5)")->required();
    rep->add_option("--sections", sections_csv, "Comma separated: cohomology,steenrod,bss,pairing,wu,verdict");
    rep->add_option("--n-max", n_max, "Largest n for Z/2^n coefficients")->check(CLI::Range(1, 20));
    rep->add_option("--seed", seed, "Seed for randomized checks");
    rep->add_flag("--pretty", pretty, "Indented output");

    std::string suite = "all";
    auto* ver = app.add_subcommand("verify", "Run an invariant suite");
    ver->add_option("complex,--complex", complex_spec, "Complex file or expression such as rp(5)")->required();
    ver->add_option("suite,--suite", suite, "axioms, cochain-identities, pairing, bss, theorem73 or all");
    ver->add_option("--n-max", n_max, "Largest n for Z/2^n coefficients")->check(CLI::Range(1, 20));
    ver->add_option("--seed", seed, "Seed for random cochains");
    ver->add_flag("--pretty", pretty, "Indented output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gen) {
            const auto k = generate(kind, params);
            if (out_path.empty())
                std::cout << to_json(k) << "\n";
            else
                save_complex_file(k, out_path);
            return exit_ok;
        }
        const Space space(cli::resolve_complex(complex_spec));
        if (*rep) {
            cli::ReportOptions opt;
            opt.n_max = n_max;
            opt.seed = seed;
            opt.sections = split_csv(sections_csv);
            const auto out = cli::build_report(space, opt);
            emit(out.doc, pretty);
            return out.passed ? exit_ok : exit_fail;
        }
        SuiteOptions opt;
        opt.n_max = n_max;
        const auto out = cli::build_verify(space, suite, seed, opt);
        emit(out.doc, pretty);
        if (!out.passed)
            std::cerr << "FAIL " << out.doc.value("first_counterexample", std::string()) << "\n";
        return out.passed ? exit_ok : exit_fail;
    } catch (const ParityError& e) {
        std::cerr << "parity error: " << e.what() << "\n";
        return exit_usage;
    } catch (const NotPoincareDuality& e) {
        std::cerr << "no Poincare duality (degree " << e.degree() << "): " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_fail;
    }
}
