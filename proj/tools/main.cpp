#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "otkit/errors.hpp"
#include "otkit/report.hpp"

namespace {

struct GlobalFlags {
    std::string format = "json";
    std::optional<std::string> file;
    std::optional<std::string> builtin;
};

otk::ArrangementInput load_input(const GlobalFlags& flags) {
    if (flags.builtin && flags.file)
        throw otk::ParseError("pass either an input file or --builtin, not both");
    if (flags.builtin) return otk::builtin_arrangement(*flags.builtin);
    if (flags.file) return otk::load_arrangement_file(*flags.file);
    throw otk::ParseError("no input: pass a file argument or --builtin <name>");
}

void emit(const otk::CommandResult& result, const std::string& format) {
    if (format == "text")
        std::cout << otk::render_text(result.document);
    else
        std::cout << result.document.dump(2) << "\n";
}

void add_input_flags(CLI::App* cmd, GlobalFlags& flags) {
    cmd->add_option("file", flags.file, "arrangement file (JSON)");
    cmd->add_option("--builtin", flags.builtin,
                    "builtin arrangement: wheel, glued:<k>, yuzvinsky, triangle, generic4");
    cmd->add_option("--format", flags.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact relation-space and Orlik-Terao ideal computations"};
    app.require_subcommand(1);

    GlobalFlags flags;
    otk::CommandOptions opt;
    std::string gen_builder;
    std::optional<std::string> gen_graph;

    auto* analyze = app.add_subcommand("analyze", "full structural report");
    add_input_flags(analyze, flags);
    analyze->add_option("--relations", opt.relations,
                        "relation set for minimal primes");
    analyze->add_option("--max-length", opt.max_length, "circuit length cap");
    analyze->add_option("--budget", opt.budget, "subset budget for searches");

    auto* circuits_cmd = app.add_subcommand("circuits", "circuit census");
    add_input_flags(circuits_cmd, flags);
    circuits_cmd->add_option("--max-length", opt.max_length, "circuit length cap");

    auto* formality = app.add_subcommand("formality", "formality report");
    add_input_flags(formality, flags);
    formality->add_option("-k", opt.k, "generation level (informational)");

    auto* codim = app.add_subcommand("codim", "codimension of the subideal");
    add_input_flags(codim, flags);
    codim->add_option("--relations", opt.relations, "relation set selector");
    codim->add_option("--budget", opt.budget, "subset budget");

    auto* primes = app.add_subcommand("primes", "minimal primes of the subideal");
    add_input_flags(primes, flags);
    primes->add_option("--relations", opt.relations, "relation set selector");
    primes->add_option("--budget", opt.budget, "subset budget");

    auto* verify = app.add_subcommand("verify", "saturation certificates");
    add_input_flags(verify, flags);
    verify->add_option("--relations", opt.relations, "relation set selector");
    verify->add_option("--degree-bound", opt.degree_bound, "cofactor degree cap");
    verify->add_option("--order", opt.order, "grevlex, lex, or perm:<sigma>");

    auto* gen = app.add_subcommand("gen", "emit a builder arrangement as a forms file");
    gen->add_option("builder", gen_builder,
                    "wheel, glued:<k>, yuzvinsky, triangle, generic4, graphic, vertex-edge")
        ->required();
    gen->add_option("graph", gen_graph, "graph name for graphic/vertex-edge");
    gen->add_option("--format", flags.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        otk::CommandResult result;
        if (analyze->parsed()) result = otk::run_analyze(load_input(flags), opt);
        if (circuits_cmd->parsed()) result = otk::run_circuits(load_input(flags), opt);
        if (formality->parsed()) result = otk::run_formality(load_input(flags), opt);
        if (codim->parsed()) result = otk::run_codim(load_input(flags), opt);
        if (primes->parsed()) result = otk::run_primes(load_input(flags), opt);
        if (verify->parsed()) result = otk::run_verify(load_input(flags), opt);
        if (gen->parsed()) result = otk::run_gen(gen_builder, gen_graph);
        emit(result, flags.format);
        return result.exit_code;
    } catch (const otk::BudgetExceededError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const otk::CertificateNotFoundError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 2;
    } catch (const otk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
