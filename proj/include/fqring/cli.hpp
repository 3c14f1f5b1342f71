#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqring::cli {

/// Runs the command-line tool. `args` excludes the program name. Returns
/// the process exit code: 0 for success or an affirmative answer, 1 for a
/// provable negative (non-member, proper ideal, unequal ideals, non-maximal
/// ideal, verification failures), 2 for malformed input, capacity, or
/// domain errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace fqring::cli
