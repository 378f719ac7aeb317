#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cycov {

// Parses the argument list, dispatches to the library, writes one JSON
// report to the selected sink. Exit status: 0 success, 1 domain error,
// 2 malformed input or usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cycov
