#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tq/report.hpp"

namespace tq::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

// args excludes the program name. JSON (or DOT for `dot`) goes to out,
// usage and parse errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// {"check", "status", "items": [{"subject", "expected", "actual"}]}, keys sorted.
std::string report_json(const Report& r);

}  // namespace tq::cli
