#pragma once
#include <string>
#include <vector>

#include "pdo/embedded_graph.hpp"

namespace pdo {

// A hole of a normalized region: a simple face of the region graph that is
// not a face of G. verts/darts follow the face walk; verts[i] = tail of
// darts[i] and darts[i] runs verts[i] -> verts[i+1].
struct Hole {
  i32 face = -1;
  std::vector<i32> verts;
  std::vector<i32> darts;
};

// Augmentation kinds for local edges with e_global == -1.
enum class AugKind : char { none = 0, chord = 1, filler = 2, clique = 3 };

struct Region {
  EmbeddedGraph g;              // normalized: holes simple, other faces triangles
  std::vector<i32> v_global;    // local vertex -> global vertex (copies share)
  std::vector<i32> e_global;    // local edge -> global edge, -1 = augmentation
  std::vector<AugKind> e_aug;
  std::vector<Hole> holes;
  std::vector<char> on_hole;    // local vertex lies on some hole walk
  // Distinct global vertices of the region, and distinct boundary globals.
  std::vector<i32> globals;
  std::vector<i32> boundary_globals;
};

struct RDivision {
  i32 r = 0;
  std::vector<Region> regions;
  std::vector<i32> region_of_edge;                 // global edge -> region
  std::vector<std::vector<i32>> regions_of_vertex; // sorted, deduped
  std::vector<char> is_boundary;                   // global: on any hole walk
  std::vector<i32> boundary_list;                  // global ids, sorted
  std::vector<i32> boundary_index;                 // global -> index in list, -1
};

struct DividerOptions {
  i32 c1 = 20, c2 = 20;
  i32 hole_bound = 12;
  bool force_separator = false;  // skip the grid tiler even for grids
  Perturbation aug_pert{0};      // stream for augmentation-edge words
};

// Adds the (x,y)-(x+1,y+1) diagonal of every grid cell as an infinite edge.
// Original edge ids are preserved; diagonals follow in cell row-major order.
// The grid tiler requires this augmentation so every tile edge keeps one of
// its incident triangles inside the tile.
EmbeddedGraph augment_grid(const EmbeddedGraph& g);

// Fan-triangulates every face of length > 3 (including the outer face) with
// infinite edges. The cycle separator needs every dual degree <= 3, otherwise
// no fundamental cycle may be balanced. Face walks must be simple.
EmbeddedGraph triangulate_all(const EmbeddedGraph& g);

RDivision build_r_division(const EmbeddedGraph& g, i32 r,
                           DividerOptions opt = {});

struct DivisionAudit {
  bool ok = true;
  std::vector<std::string> problems;
  i32 region_count = 0;
  i32 max_region_vertices = 0;
  i64 boundary_total = 0;
  i32 max_holes = 0;
};

DivisionAudit audit_division(const EmbeddedGraph& g, const RDivision& div,
                             i32 r, const DividerOptions& opt = {});

// Region with one hole kept open and every other hole star-filled by a new
// vertex joined to its cycle with infinite edges. Vertices 0..region.g.n-1
// coincide with region-local ids; fillers follow.
struct RegionHost {
  EmbeddedGraph g;
  i32 hole_face = -1;            // face id of the open hole in g
  std::vector<i32> hole_verts;   // cyclic walk, local ids
  std::vector<i32> hole_darts;
  std::vector<i32> hole_pos;     // local vertex -> position on hole, -1
  std::vector<i32> fillers;      // filler vertex ids
  i32 k() const { return (i32)hole_verts.size(); }
};

RegionHost build_region_host(const Region& region, i32 hole_idx,
                             u64 pert_id_base, const Perturbation& pert);

// Host over a standalone finalized graph: the given face becomes the open
// hole, no fillers. The face walk must be simple.
RegionHost host_from_face(const EmbeddedGraph& g, i32 face);

}  // namespace pdo
