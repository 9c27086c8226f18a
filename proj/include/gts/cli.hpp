#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gts/bench.hpp"

namespace gts {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliOptions {
    std::vector<SearchConfig> configs;
    ReportFormat format = ReportFormat::Human;
    bool show_help = false;
    std::string help_text;
};

/// Parses harness flags into configs (argv without the program name).
/// --compare appends the paired baseline config. Throws UsageError on
/// unknown flags or invariant violations; the message is what main prints
/// before exiting with status 1.
CliOptions parse_cli(const std::vector<std::string>& argv);

}  // namespace gts
