#pragma once
#include <span>
#include <string>
#include <vector>

#include "pdo/r_division.hpp"
#include "pdo/shortest_paths.hpp"

namespace pdo {

// Weighted Voronoi cells of one (source, region, hole) triple. Cells are
// named by hole positions 0..k-1; cell_of[v] is the position of the last
// hole vertex on the cheapest weighted path into v. Sites own themselves.
struct VoronoiDiagram {
  const RegionHost* host = nullptr;
  std::vector<Cost> weights;  // per hole position
  std::vector<i32> cell_of;   // local vertex -> hole position
  std::vector<Cost> dist;     // weight(site) + d(site, v), perturbed
  std::vector<i32> parent;    // dart into v on its weighted path, -1 at sites
  bool tie = false;

  i32 k() const { return (i32)weights.size(); }
  i32 site(i32 cell) const { return host->hole_verts[cell]; }
};

VoronoiDiagram compute_cells(const RegionHost& host,
                             std::span<const Cost> site_weights);

// Contracted dual of the cell boundary. Vertex 0 is v_inf (the dual vertex
// of the open hole); every other vertex is a face of the host where three
// or more cells meet. An edge stores the dual path it contracts as the
// primal darts it crosses; crossing dart d runs face_of[d] -> face_of[twin].
// The primal tail of every crossed dart lies in cell_left, the head in
// cell_right.
struct VorEdge {
  i32 x = -1, y = -1;      // vor vertex ids, walk runs x -> y
  std::vector<i32> darts;  // primal darts crossed, in walk order
  i32 cell_left = -1, cell_right = -1;  // cells beside the x -> y walk
};

// Dart 2i runs edge i from x, dart 2i+1 from y; rot is clockwise. Faces of
// the multigraph are the cell interiors: cycle c bounds cell cycle_cell[c].
struct VorMultigraph {
  std::vector<i32> face_of_vert;  // vor vertex -> face of host.g
  std::vector<i32> vert_of_face;  // face -> vor vertex, -1
  std::vector<VorEdge> edges;
  std::vector<std::vector<i32>> rot;
  std::vector<i32> pos_in_rot;
  std::vector<std::vector<i32>> cycles;  // face orbits of the multigraph
  std::vector<i32> cycle_of;             // vor dart -> cycle
  std::vector<i32> cycle_cell;           // cycle -> cell
  std::vector<i32> cell_cycle;           // cell -> cycle, -1 if boundaryless

  i32 nv() const { return (i32)face_of_vert.size(); }
  i32 ne() const { return (i32)edges.size(); }
  static i32 twin(i32 d) { return d ^ 1; }
  i32 tail(i32 d) const { const VorEdge& e = edges[d >> 1]; return (d & 1) ? e.y : e.x; }
  i32 head(i32 d) const { return tail(twin(d)); }
  i32 rot_next(i32 d) const {
    const auto& r = rot[tail(d)];
    i32 p = pos_in_rot[d] + 1;
    return r[p == (i32)r.size() ? 0 : p];
  }
  i32 face_next(i32 d) const { return rot_next(twin(d)); }
  i32 degree(i32 v) const { return (i32)rot[v].size(); }
};

VorMultigraph build_vor(const VoronoiDiagram& vd);

// Star graph: one edge (v_inf, w) per cell c and vor vertex w on the cell's
// boundary cycle, labeled with the cell and with the landing vertex of c on
// the host face of w; vor edges touching v_inf are dropped, the rest kept.
struct TriVorEdge {
  i32 x = -1, y = -1;  // x == 0 exactly for star edges
  i32 cell = -1;       // star edges only
  i32 land = -1;       // star edges only: local vertex of host
  i32 vor = -1;        // kept vor edges only: source edge id
  bool star() const { return cell >= 0; }
};

struct TriVor {
  i32 nv = 0;
  std::vector<i32> vert_face;  // vor vertex -> face of host.g
  std::vector<TriVorEdge> edges;
  std::vector<std::vector<i32>> rot;  // clockwise, darts 2i and 2i+1
  std::vector<i32> pos_in_rot;
  std::vector<i32> face_of;   // dart -> face
  std::vector<i32> face_cell; // face -> cell
  i32 face_count = 0;

  i32 ne() const { return (i32)edges.size(); }
  static i32 twin(i32 d) { return d ^ 1; }
  i32 tail(i32 d) const { const TriVorEdge& e = edges[d >> 1]; return (d & 1) ? e.y : e.x; }
  i32 head(i32 d) const { return tail(twin(d)); }
  i32 rot_next(i32 d) const {
    const auto& r = rot[tail(d)];
    i32 p = pos_in_rot[d] + 1;
    return r[p == (i32)r.size() ? 0 : p];
  }
  i32 face_next(i32 d) const { return rot_next(twin(d)); }
  i32 degree(i32 v) const { return (i32)rot[v].size(); }
};

TriVor build_trivor(const VorMultigraph& vor, const VoronoiDiagram& vd);

struct VoronoiAudit {
  bool ok = true;
  std::vector<std::string> problems;
};

// Partition, one site per cell, cell connectivity.
VoronoiAudit audit_voronoi(const VoronoiDiagram& vd);
// Degree 3 off v_inf (when the interior is triangulated), cycle/cell
// bijection, one v_inf visit per cycle, cell order around v_inf = hole
// order, side consistency, size bound.
VoronoiAudit audit_vor(const VorMultigraph& vor, const VoronoiDiagram& vd);
// Every face touches v_inf and lies in one cell; sphere Euler count; root
// piece structure (two star edges per vertex, star neighbors around each
// vertex, star corner faces).
VoronoiAudit audit_trivor(const TriVor& tv, const VorMultigraph& vor,
                          const VoronoiDiagram& vd);

}  // namespace pdo
