#include <iostream>

#include "gts/bench.hpp"
#include "gts/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        gts::CliOptions options = gts::parse_cli(args);
        if (options.show_help) {
            std::cout << options.help_text;
            return 0;
        }
        gts::BenchReport report = gts::run_matrix(options.configs);
        gts::emit_report(report, options.format, std::cout);
        return 0;
    } catch (const gts::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n"
                  << "run with --help for the flag list\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
