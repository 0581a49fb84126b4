#pragma once
#include <span>
#include <vector>

#include "pdo/r_division.hpp"
#include "pdo/shortest_paths.hpp"

namespace pdo {

// Independent weighted Voronoi: one full search per site, winner by
// perturbed total, owner read off the winning path as its last hole
// vertex. Returns the hole position per vertex.
std::vector<i32> brute_voronoi(const RegionHost& host,
                               std::span<const Cost> site_weights);

// Closed-region membership for a non-crossing closed dart walk: a face is
// inside when the dual cannot reach it from outside_face without crossing a
// walk edge; a vertex is inside when it lies on the walk or on an inside
// face. Throws if the walk is not closed.
struct RegionMembership {
  std::vector<char> face_in;
  std::vector<char> vert_in;
};
RegionMembership brute_region_membership(const EmbeddedGraph& g,
                                         i32 outside_face,
                                         std::span<const i32> walk);

// Plain binary-heap Dijkstra, separate from the production search. Returns
// perturbed costs; reported() gives the base distance.
std::vector<Cost> brute_sssp(const EmbeddedGraph& g, i32 src);

i64 brute_distance(const EmbeddedGraph& g, i32 u, i32 v);

// n x n base-distance table, kInf when unreachable.
std::vector<std::vector<i64>> brute_all_pairs(const EmbeddedGraph& g);

}  // namespace pdo
