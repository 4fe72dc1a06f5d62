#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fgroup {

// The workbench command line, run against explicit streams so tests can
// drive it in-process.  `args` excludes the program name.  Returns the
// process exit code: 0 on success, the parser's code on usage errors,
// 2 on domain or I/O errors (after printing a diagnostic to err).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fgroup
