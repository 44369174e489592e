#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padic {

// Entry point behind the padicgl binary, split out so tests can drive it.
// Exit codes: 0 success, 1 usage or validation error, 2 a verified claim
// failed on the given input.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic
