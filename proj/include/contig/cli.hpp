#pragma once

#include "contig/complex.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace contig {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitNo = 1,       // a decision answered negatively
    kExitInput = 2,    // unreadable or invalid input, bad usage
    kExitUnknown = 3,  // a cap was hit or a value is only an upper bound
};

/// Graphviz document of the 1-skeleton. Nodes in vertex order, edges sorted by
/// endpoint ids, and facets of dimension >= 2 listed as comments.
std::string emit_dot(const SimplicialComplex& k);

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contig
