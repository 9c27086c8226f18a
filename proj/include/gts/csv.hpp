#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gts {

/// RFC-4180-style quoting: fields holding a comma, quote, or newline get
/// wrapped in quotes, embedded quotes doubled.
std::string csv_escape(std::string_view field);

std::string csv_join(const std::vector<std::string>& fields);

/// Parses CSV text into rows of fields; handles quoted fields. Throws
/// InvalidInput on malformed quoting.
std::vector<std::vector<std::string>> csv_parse(std::string_view text);

}  // namespace gts
