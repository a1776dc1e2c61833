#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qll {

/**
 * Runs one qll command (arguments without the program name), writing the
 * report to `out` and diagnostics to `err`. Returns 0 when everything passed,
 * 1 on a verification failure, 2 on a usage or configuration error and 3 when
 * only inconclusive numeric checks stood in the way.
 */
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qll
