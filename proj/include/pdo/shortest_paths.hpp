#pragma once
#include <span>
#include <utility>
#include <vector>

#include "pdo/embedded_graph.hpp"

namespace pdo {

// Shortest path tree. parent[v] is the dart that last relaxed v: in forward
// mode it points into v (head(parent[v]) == v); in reverse mode it is the
// first dart of the v -> root path (tail(parent[v]) == v). -1 for roots and
// unreached vertices. tie reports any relaxation that compared exactly equal
// to the incumbent (perturbation collision).
struct SpResult {
  std::vector<Cost> dist;
  std::vector<i32> parent;
  std::vector<i32> site;       // multi-source only: owning site per vertex
  std::vector<i32> order;      // settle order
  bool tie = false;
};

// Single-source; reverse computes distances *into* src along arc directions.
SpResult sssp(const EmbeddedGraph& g, i32 src, bool reverse = false,
              bool audit = true);

// Weighted multi-source search. Each site is (vertex, additive cost). A site
// vertex always owns itself; other vertices inherit the owner of the
// predecessor on their shortest path (i.e. the last site on the path).
SpResult multi_source(const EmbeddedGraph& g,
                      std::span<const std::pair<i32, Cost>> sites,
                      bool audit = true);

}  // namespace pdo
