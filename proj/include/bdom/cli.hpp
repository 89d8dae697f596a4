#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bdom::cli {

/// Runs one `bdom` invocation. `args` excludes the program name.
/// Returns 0 on success or a true verdict, 1 on a false verdict, 2 on errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bdom::cli
