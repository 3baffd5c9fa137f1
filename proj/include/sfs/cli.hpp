#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sfs {

// Runs one CLI invocation. args as on the command line, including the
// program name. Exit status: 0 on success (whatever the verdict),
// 2 on expression/usage parse errors, 3 on violated preconditions,
// 1 on internal invariant breaches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfs
