// Command-line front end: dfinv <command> --input instance.json [--format text|json]

#include "dfinv/error.hpp"
#include "dfinv/instance.hpp"
#include "dfinv/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Exact Futaki invariants of Weyl-invariant polytopes"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "text";
    bool mc_check = false;
    bool allow_non_invariant = false;
    std::uint64_t seed = 0;

    for (const auto& name : dfinv::command_names()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input,-i", input, "instance JSON file")->required();
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--mc-check", mc_check, "append Monte-Carlo corroboration");
        sub->add_option("--seed", seed, "Monte-Carlo seed (overrides options.seed)");
        sub->add_flag("--allow-non-invariant-f", allow_non_invariant, "proceed when f is not W-invariant");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const CLI::App* sub = app.get_subcommands().front();
    const auto fmt = format == "json" ? dfinv::OutputFormat::json : dfinv::OutputFormat::text;

    try {
        const dfinv::Instance instance = dfinv::load_instance(input, allow_non_invariant);
        for (const auto& w : instance.warnings) std::cerr << "warning: " << w << "\n";
        dfinv::RunOptions options;
        options.mc_check = mc_check;
        if (sub->count("--seed") > 0) options.seed = seed;
        std::cout << dfinv::render(dfinv::run_command(command, instance, options), fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return dfinv::exit_code_for(e);
    }
    return 0;
}
