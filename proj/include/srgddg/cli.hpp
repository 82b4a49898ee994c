#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srgddg::cli {

inline constexpr int kReportSchemaVersion = 1;

/// Runs one command line (without the program name). "-" as a file argument
/// reads `in`. Exit codes: 0 success, 1 domain error (reported in the JSON
/// report on `out`), 2 usage error (message on `err`).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace srgddg::cli
