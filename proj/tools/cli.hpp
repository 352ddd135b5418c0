#ifndef CMUNITS_TOOLS_CLI_HPP
#define CMUNITS_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "cmunits/error.hpp"

namespace cmunits::cli
{

// Exit statuses. Library errors map to error_base + ErrorCode index.
inline constexpr int exit_ok = 0;
inline constexpr int exit_checks_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int error_base = 10;

int exit_status(ErrorCode code);

// Runs one command line (args excludes the program name). The JSON report
// goes to out, diagnostics to err.
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace cmunits::cli

#endif
