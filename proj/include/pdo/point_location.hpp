#pragma once
#include <span>
#include <vector>

#include "pdo/r_division.hpp"

namespace pdo {

// Point location on a region host with hole vertices b_0..b_{k-1} in hole
// order. wedge(w, a, b) is the closed part of the host enclosed by the
// b_a -> w and b_b -> w shortest paths together with the hole arc running
// forward in hole order from b_a to b_b.

// Wedge structure for one target w. fwd[x] is the smallest i with x in
// wedge(w, b_0, b_i); bwd[x] is the same on the reversed hole order.
struct WedgeIndex {
  const RegionHost* host = nullptr;
  i32 w = -1;
  i32 k = 0;
  std::vector<i32> parent;  // first dart of the x -> w shortest path
  std::vector<i32> fwd, bwd;
  std::vector<i32> tin, tout;  // preorder intervals of the tree toward w
  // x lies on the y -> w path exactly when x is a tree ancestor of y.
  bool on_path(i32 x, i32 y) const {
    return tin[x] <= tin[y] && tin[y] < tout[x];
  }
};

WedgeIndex build_wedge_index(const RegionHost& host, i32 w);

// x in wedge(w, a, b) for unreduced positions a <= b <= a + k; a == b asks
// whether x lies on the b_a -> w path itself.
bool wedge_query(const WedgeIndex& wi, i32 x, i32 a, i32 b);

// Darts of the tree path from vertex x to the tree root.
std::vector<i32> tree_path_darts(const EmbeddedGraph& g,
                                 std::span<const i32> parent, i32 x);

// The unique hole position i such that edge (u, v) lies inside
// wedge(u, b_i, b_{i+1}) without being an edge of the b_{i+1} -> u path, or
// -1 when no such position exists. to_u is the parent array of u's wedge
// index; uv_edge is the connecting edge id.
i32 compute_buv(const WedgeIndex& wi, i32 uv_edge);

// Do the two simple dart paths cross transversally? Shared runs that enter
// and leave on the same side do not count.
bool paths_cross(const EmbeddedGraph& g, std::span<const i32> a,
                 std::span<const i32> b);

// Faces of the host enclosed by a non-crossing closed dart walk, computed by
// a dual search from the hole face blocked at walk edges.
std::vector<char> region_faces(const RegionHost& host,
                               std::span<const i32> walk);

// box(a, b) for an edge (u, v) is the closed part of the host enclosed by
// the b_a -> u path, the edge, the b_b -> v path and the hole arc from b_a
// forward to b_b; defined when the two paths are vertex disjoint.

// Strip structure for one arc i1..i2 (unreduced) of basic boxes box(i) =
// box(b_i, b_{i+1}). Boxes are defined exactly for j <= i < i2. Per face f,
// jf is the last i with f inside box(i) when f later leaves, and jpf + 1 is
// the first such i when f is not already inside box(j); -1 otherwise.
struct StripIndex {
  i32 i1 = 0, i2 = 0;
  i32 j = 0;
  std::vector<i32> jf, jpf;
  std::vector<char> f_lo, f_hi;  // faces of box(j) and of box(i2 - 1)
};

// Constant-time box membership for one ordered pair (u, v).
struct EdgeLocator {
  const RegionHost* host = nullptr;
  i32 u = -1, v = -1;
  i32 uv_dart = -1;  // dart u -> v
  i32 buv = -1, bvu = -1;
  WedgeIndex du, dv;
  std::vector<StripIndex> strips;
  bool has_fuv = false;
  std::vector<char> f_uv;      // faces of box(buv, buv + 1) when buv exists;
                               // no strip can cover that hole edge
  std::vector<i32> face_pick;  // per vertex, an incident non-hole face
  mutable i64 accesses = 0;    // structure reads by the last box_query
};

EdgeLocator build_edge_locator(const RegionHost& host, i32 u, i32 v);

// w in box(a, b) for hole positions a != b in [0, k); requires the
// b_a -> u and b_b -> v paths to be vertex disjoint.
bool box_query(const EdgeLocator& loc, i32 w, i32 a, i32 b);

}  // namespace pdo
