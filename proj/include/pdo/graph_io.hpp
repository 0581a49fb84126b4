#pragma once
#include <iosfwd>
#include <string>

#include "pdo/embedded_graph.hpp"

namespace pdo {

// Text format:
//   pdo-graph 1
//   <n> <m>
//   [grid <W> <H>]
//   m lines:  <tail> <head> <w_fwd> <w_rev>     (weights are ints or "inf")
//   n lines:  <deg> <dart_0> ... <dart_deg-1>   (clockwise, dart = 2*edge+dir)
// Round-trips bit-exactly through write_graph/read_graph.
void write_graph(std::ostream& os, const EmbeddedGraph& g);
EmbeddedGraph read_graph(std::istream& is);

void save_graph(const std::string& path, const EmbeddedGraph& g);
EmbeddedGraph load_graph(const std::string& path);

}  // namespace pdo
