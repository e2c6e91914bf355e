#ifndef SOFTTOP_CLI_HPP
#define SOFTTOP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace softtop::cli {

/// Exit codes: 0 verdict-true/success, 1 verdict-false (witness printed),
/// 2 usage, parse, or validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace softtop::cli

#endif
