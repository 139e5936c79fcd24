#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace rado::cli {

/// Exit codes: 0 affirmative, 1 definitive negative, 2 cap reached, 3 usage or
/// input error.
enum ExitCode : int { affirmative = 0, negative = 1, unknown = 2, usage_error = 3 };

/// Runs the command line args (args[0] is the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace rado::cli
