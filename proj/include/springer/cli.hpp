#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "springer/orders.hpp"

namespace springer::cli {

// Renders cover relations as a DOT digraph, one node per element in input
// order, one arc per cover pair from lower to upper.
std::string emit_dot(const PosetEdges& edges, const std::vector<std::string>& labels);

// Parses argv (program name excluded) and executes one subcommand.
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or parse
// error, 3 cap or precondition error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace springer::cli
