// Command-line front end: runs a command file against a fresh session.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bang/cli/parser.hpp"
#include "bang/cli/session.hpp"

using namespace bang::cli;

namespace {

int exit_with(ExitCode code)
{
    return static_cast<int>(code);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact engine for the cofree cocommutative coalgebra !V"};
    std::string input;
    std::string format = "text";
    std::size_t partition_cap = bang::default_partition_cap;
    bool check = false;
    app.add_option("-i,--input", input, "Command file (default: stdin)");
    app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--partition-cap", partition_cap, "Largest ket degree promote may lift");
    app.add_flag("--check", check, "Verify '# expect:' annotations; exit 4 on a mismatch");
    CLI11_PARSE(app, argc, argv);

    std::string source;
    if (input.empty() || input == "-") {
        source.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(input, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << input << "\n";
            return exit_with(ExitCode::EvaluationError);
        }
        source.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }

    std::vector<Statement> statements;
    try {
        statements = parse(source);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_with(ExitCode::ParseError);
    }

    Session session(partition_cap);
    std::vector<QueryResult> results;
    try {
        results = session.execute(statements);
    } catch (const CommandError& e) {
        const char* prefix = e.code() == ExitCode::ParseError  ? "error: "
                             : e.code() == ExitCode::SizeLimit ? "size limit: "
                                                               : "evaluation error: ";
        std::cerr << prefix << e.what() << "\n";
        return exit_with(e.code());
    }

    if (check) {
        const CheckReport report = check_expectations(results);
        std::cout << report.log;
        return exit_with(report.failed == 0 ? ExitCode::Success : ExitCode::CheckFailed);
    }
    std::cout << render_results(results, format == "machine" ? OutputFormat::Machine : OutputFormat::Text);
    return exit_with(ExitCode::Success);
}
