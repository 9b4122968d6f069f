#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chieuler::cli {

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns 0 pass, 1 identity failure, 2 usage error,
/// 3 precision or convergence failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chieuler::cli
