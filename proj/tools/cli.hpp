#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpaths::cli {

/// Runs one command line (args excludes the program name). Returns 0 on
/// success, 1 when verification fails and 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fpaths::cli
