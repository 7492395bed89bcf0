#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilorb {

/// Runs the command-line front end. Returns 0 on success, 1 on a domain
/// error (bad orbit, unknown label, ...) and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilorb
