// credal: command-line front end for scenario files.
//
//   credal <command> <scenario.scn> [args...] [--mode strict|lenient]
//          [--seed N] [--format text|structured]

#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "credal/cli.hpp"
#include "credal/scenario.hpp"

int main(int argc, char** argv) {
    using namespace credal;

    CLI::App app{"Decisions with sets of priors: unanimity and maxmin rules, rectangular hulls, audits"};
    app.require_subcommand(1);

    cli::CommandRequest req;
    std::string scenario_path;
    std::string mode, format = "text";
    std::uint64_t seed = 0;

    const std::map<std::string, std::string> commands = {
        {"compare", "Compare two acts: compare <bewley|maxmin> <act> <act>"},
        {"update", "Prior-by-prior update on a cell (\"R,B\" or a cell name such as RB)"},
        {"rectangularize", "Extreme points of the rectangular hull"},
        {"audit-dc", "Dynamic consistency audit: audit-dc <bewley|maxmin>"},
        {"audit-consequentialism", "Consequentialism audit of the updated sets"},
        {"check-axioms", "Set-level coherence and prudence conditions against a second set"},
        {"evaluate", "Value of an act: evaluate <bewley|maxmin> <act> [--recursive]"},
        {"check-gmms", "Check that maxmin completes unanimity on the scenario's acts"},
        {"show", "Print the normalized scenario document"},
    };

    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("scenario", scenario_path, "Scenario file")->required()->check(CLI::ExistingFile);
        sub->add_option("args", req.args, "Command arguments");
        sub->add_option("--mode", mode, "Updating mode")->check(CLI::IsMember({"strict", "lenient"}));
        sub->add_option("--seed", seed, "Seed for sampled acts");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
        if (name == "compare" || name == "evaluate" || name == "audit-dc" || name == "update" ||
            name == "audit-consequentialism" || name == "check-gmms")
            sub->add_flag("--after-rectangularize", req.after_rectangularize,
                          "Use the rectangular hull of the scenario's credal set");
        if (name == "evaluate") sub->add_flag("--recursive", req.recursive, "Backward-induction maxmin value");
        if (name == "audit-dc" || name == "audit-consequentialism" || name == "check-gmms") {
            sub->add_option("--acts", req.acts, "Restrict to these acts")->delimiter(',');
            sub->add_option("--samples", req.samples, "Number of seeded random acts to add");
        }
        if (name == "check-axioms")
            sub->add_option("--against", req.against, "Second set")
                ->check(CLI::IsMember({"document", "rectangular", "simplex"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::InputError;
    }

    auto* sub = app.get_subcommands().front();
    req.command = sub->get_name();
    if (!mode.empty()) req.mode = mode == "lenient" ? UpdateMode::Lenient : UpdateMode::Strict;
    if (sub->count("--seed")) req.seed = seed;
    req.format = format == "structured" ? cli::OutputFormat::Structured : cli::OutputFormat::Text;

    ScenarioDocument doc;
    try {
        doc = load_scenario(scenario_path);
    } catch (const Error& e) {
        std::cerr << scenario_path << ": " << e.what() << "\n";
        return cli::InputError;
    }
    return cli::run_command(doc, req, std::cout, std::cerr);
}
