#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace klr::cli {

/// Runs the workbench on `args` (program name excluded).  Returns 0 on
/// success, 1 on domain errors (JSON on `err`), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klr::cli
