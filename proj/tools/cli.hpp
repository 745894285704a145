#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace llt::cli {

/// Dispatches one subcommand (build | sllt | normalize | metrics | oracle |
/// tradeoff | hardgraph | selftest).  Data goes to files or `out`; logs go to
/// `err`.  Returns 0 when every invariant check passed, 1 when a check
/// failed, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace llt::cli
