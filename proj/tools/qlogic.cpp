// Copyright 2026 The qlogic Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qlogic run <file> [--seed N] [--trials N] [--format text|json] [-o FILE]
// qlogic check-axioms [--basis G P] [--seed N] [--ascii]
//
// Exit codes: 0 success, 1 scenario or usage error, 2 internal numeric error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "qlogic/axioms.hpp"
#include "qlogic/error.hpp"
#include "qlogic/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitScenario = 1;
constexpr int kExitNumeric = 2;

int run_command(const std::string &path, const qlogic::scenario::RunOptions &options,
                qlogic::scenario::Format format, const std::string &output) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "qlogic: cannot open '" << path << "'\n";
        return kExitScenario;
    }
    std::ostringstream text;
    text << in.rdbuf();

    const auto scenario = qlogic::scenario::parse_scenario(text.str());
    const auto report = qlogic::scenario::run_scenario(scenario, options);
    const std::string bytes = qlogic::scenario::emit_report(report, format);
    if (output.empty()) {
        std::cout << bytes;
        return kExitOk;
    }
    std::ofstream out(output, std::ios::binary);
    out << bytes;
    if (!out) {
        std::cerr << "qlogic: cannot write '" << output << "'\n";
        return kExitScenario;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Single-qubit measurement simulator with an insider judgement calculus"};
    app.require_subcommand(1);

    auto *run = app.add_subcommand("run", "Run a scenario file and print its report");
    std::string path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string format_name = "text";
    std::string output;
    run->add_option("file", path, "Scenario file")->required();
    run->add_option("--seed", seed, "Override the scenario seed");
    run->add_option("--trials", trials, "Override the number of trials")
        ->check(CLI::PositiveNumber);
    run->add_option("--format", format_name, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    run->add_option("-o,--output", output, "Write the report to a file instead of stdout");

    auto *check = app.add_subcommand(
        "check-axioms", "Derive both insider axioms from simulated events and check them");
    std::vector<std::string> basis_args;
    std::uint64_t check_seed = 1;
    bool ascii = false;
    check->add_option("--basis", basis_args, "Fixed basis angles gamma phi (e.g. pi/4 0)")
        ->expected(2);
    check->add_option("--seed", check_seed, "Seed for the random qubits and bases");
    check->add_flag("--ascii", ascii, "Print judgements in ASCII notation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitScenario;
    }

    try {
        if (run->parsed()) {
            const auto format = format_name == "json" ? qlogic::scenario::Format::Json
                                                      : qlogic::scenario::Format::Text;
            return run_command(path, {seed, trials}, format, output);
        }
        qlogic::AxiomCheckOptions options;
        options.seed = check_seed;
        if (!basis_args.empty()) {
            options.basis = std::pair{qlogic::scenario::parse_real(basis_args[0]),
                                      qlogic::scenario::parse_real(basis_args[1])};
        }
        const auto result = qlogic::check_axioms(options);
        std::cout << qlogic::render_axiom_check(
            result, ascii ? qlogic::logic::Notation::Ascii : qlogic::logic::Notation::Unicode);
        return result.ok() ? kExitOk : kExitScenario;
    } catch (const qlogic::NumericError &e) {
        std::cerr << "qlogic: numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const qlogic::Error &e) {
        std::cerr << "qlogic: " << e.what() << "\n";
        return kExitScenario;
    }
}
