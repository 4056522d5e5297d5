#ifndef ARROWCAT_CLI_HPP
#define ARROWCAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace arrowcat::cli {

/// Exit status: 0 the property holds (or the conversion/generation
/// succeeded), 1 it fails, 2 usage, parse, capacity or wiring errors.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrowcat::cli

#endif  // ARROWCAT_CLI_HPP
