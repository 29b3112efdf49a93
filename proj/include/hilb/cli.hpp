#ifndef HILB_CLI_HPP
#define HILB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hilb {

/// Runs one CLI invocation. args excludes the program name. Returns the
/// process exit code: 0 on success, 2 on any input or usage error (the
/// diagnostic names the violated precondition and goes to err).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilb

#endif
