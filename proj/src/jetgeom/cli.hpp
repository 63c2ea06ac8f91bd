#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jetgeom::cli {

/// Command dispatch. Exit status: 0 on success, 2 on mathematical error cases
/// (singular point, line off the variety, ...), 1 on I/O, parse, or usage
/// failure. Identical invocations produce byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetgeom::cli
