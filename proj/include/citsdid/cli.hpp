#pragma once

#include <string>
#include <vector>

namespace citsdid::cli {

// Subcommands: fit, event-study, compare, simulate. Results go to --out or
// standard output; diagnostics go to standard error. Returns 0 on success,
// 1 on validation/configuration errors, 2 on I/O errors.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without the program name

}  // namespace citsdid::cli
