#pragma once
#include <string>
#include <vector>

#include "pdo/voronoi.hpp"

namespace pdo {

// Primal representation of a 2-cycle through v_inf: the triangle side
// (x, y) behind the shared vor vertex, the sites b1, b2 of the two cells
// the cycle's star edges lie in, and the weighted paths b1 -> x, b2 -> y.
struct SeparatorRep {
  i32 b1 = -1, x = -1, y = -1, b2 = -1;  // local vertices of the host
  i32 through = -1;                      // the shared vor vertex
};

// Every face of the star graph owns exactly one corner at v_inf, so a
// piece of the recursive decomposition is an ordered sublist of the fan
// positions around v_inf: consecutive listed positions that are adjacent
// in the fan delimit an original face, non-adjacent ones a face collapsed
// by an earlier cut, and the wrap item is the piece's own outer face once
// it has a bounding cycle. The face count is the list length.
struct PieceArc {
  std::vector<i32> pos;  // absolute fan positions, cyclic order
  bool root = true;      // root has no bounding cycle
  i32 faces() const { return (i32)pos.size(); }
};

struct DecompNode {
  SeparatorRep rep;
  i32 e1 = -1, e2 = -1;  // star edge ids of the cycle; C(e1) = cell of b1
  i32 inner = -1, outer = -1;  // child: node id, or -1 - leaf id
  i32 faces = 0, in_faces = 0, out_faces = 0;  // side counts in this piece
};

struct DecompLeaf {
  std::vector<i32> faces;  // original star graph faces of the piece
  std::vector<i32> sites;  // owning cell's site per face, local vertices
  i32 piece_faces = 0;     // including faces collapsed by earlier cuts
};

struct DecompTree {
  std::vector<DecompNode> nodes;
  std::vector<DecompLeaf> leaves;
  i32 root = 0;  // node id, or -1 - leaf id
  i32 depth = 0;
};

// Balanced 2-cycle of a piece with more than six faces, found by the
// iterative shrinking walk. Returns indices into arc.pos.
std::pair<i32, i32> find_separator(const TriVor& tv, const PieceArc& arc);

DecompTree decompose(const TriVor& tv, const VoronoiDiagram& vd);

SeparatorRep extract_rep(const TriVor& tv, const VoronoiDiagram& vd, i32 e1,
                         i32 e2);

// Weighted path from the owning site down to v, via the search parents.
std::vector<i32> cell_path(const VoronoiDiagram& vd, i32 v);

struct DecompAudit {
  bool ok = true;
  std::vector<std::string> problems;
  i32 depth = 0;
  i32 max_leaf_faces = 0;
};

// Balance bounds per node, children partition the parent's faces, depth
// bound, leaf size, representation invariants, disjoint paths.
DecompAudit audit_decomposition(const DecompTree& t, const TriVor& tv,
                                const VoronoiDiagram& vd);

}  // namespace pdo
