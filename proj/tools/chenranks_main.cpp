#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "chenranks/analysis.hpp"
#include "chenranks/errors.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw chenranks::InputError("cannot open input file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// The engine is sequential, so the cap only needs validating.
void check_thread_cap() {
    const char* raw = std::getenv("OSCHEN_THREADS");
    if (raw == nullptr) return;
    std::string value(raw);
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value == "0")
        throw chenranks::InputError("OSCHEN_THREADS must be a positive integer, got \"" + value +
                                    "\"");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chen rank and Orlik-Solomon linear strand analysis of "
                 "central complex hyperplane arrangements"};

    std::string input_path;
    std::string example_name;
    std::string strategy_name = "verify";
    std::string format = "json";
    chenranks::AnalyzeOptions options;
    unsigned long long seed = 0;
    bool timings = false;
    bool list = false;

    auto* input_opt = app.add_option("--input", input_path, "JSON arrangement description");
    auto* example_opt =
        app.add_option("--example", example_name, "built-in example name (see --list-examples)");
    input_opt->excludes(example_opt);
    app.add_option("--kmax", options.kmax, "top degree for Chen ranks")->default_val(10);
    app.add_option("--imax", options.imax, "top homological degree for the Betti table")
        ->default_val(6);
    app.add_option("--strategy", strategy_name, "rank strategy")
        ->check(CLI::IsMember({"exact", "modular", "verify"}))
        ->default_val("verify");
    app.add_option("--seed", seed, "seed for the modular and verify strategies")->default_val(0);
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val("json");
    app.add_option("--search-cap", options.limits.max_subset,
                   "largest sub-arrangement size tried in the resonance search (-1: no cap)");
    app.add_option("--torsion-window", options.torsion_window,
                   "multiplication window for the torsion table")
        ->default_val(4);
    app.add_flag("--timings", timings, "include per-phase wall-clock times in the report");
    app.add_flag("--list-examples", list, "print the example registry and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        check_thread_cap();
        if (list) {
            for (const chenranks::ExampleEntry& entry : chenranks::list_examples())
                std::cout << entry.name << "  " << entry.description << "\n";
            return 0;
        }
        if (input_path.empty() == example_name.empty())
            throw chenranks::InputError("exactly one of --input or --example is required");

        chenranks::ArrangementInput input = input_path.empty()
                                                ? chenranks::example_input(example_name)
                                                : chenranks::parse_input(slurp(input_path));

        if (strategy_name == "exact")
            options.strategy.mode = chenranks::exactla::RankMode::exact;
        else if (strategy_name == "modular")
            options.strategy.mode = chenranks::exactla::RankMode::modular;
        else
            options.strategy.mode = chenranks::exactla::RankMode::verify;
        options.strategy.seed = seed;

        chenranks::AnalysisReport report = chenranks::analyze(input, options);
        if (format == "json")
            std::cout << chenranks::report_json(report, timings);
        else
            std::cout << chenranks::report_text(report);
        return 0;
    } catch (const chenranks::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const chenranks::InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const chenranks::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    }
}
