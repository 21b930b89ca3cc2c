#pragma once

#include <iosfwd>

namespace schlicht::cli {

// Exit codes: 0 all checks passed, 1 a non-advisory check failed, 2 usage error.
int run(int argc, char** argv);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace schlicht::cli
