#pragma once
// k4coh command-line front end. Exit status: 0 all checks pass, 1 an audit
// or check failed, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace k4::cli {

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k4::cli
