#pragma once
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdo/cost.hpp"

namespace pdo {

// Combinatorial embedding of a weighted digraph whose arcs pair up into
// embedded edges. Dart 2e runs a->b of edge e, dart 2e+1 runs b->a.
// rot[v] lists the darts with tail v in clockwise order.
struct EdgeRec {
  i32 a = -1, b = -1;
  Weight wab, wba;
  u64 pert = 0;  // perturbation word, set by perturb()
};

struct FaceRec {
  i32 first_dart = -1;
  i32 len = 0;
};

class EmbeddedGraph {
 public:
  i32 n = 0;
  std::vector<EdgeRec> edges;
  std::vector<std::vector<i32>> rot;
  bool allow_multi = false;  // derived graphs may hold parallel edges
  i32 grid_w = 0, grid_h = 0;  // generator metadata, 0 if not a grid

  // Derived by finalize():
  std::vector<i32> face_of;      // dart -> face id
  std::vector<FaceRec> faces;
  std::vector<i32> pos_in_rot;   // dart -> index within rot[tail]
  i32 components = 0;

  i32 m() const { return (i32)edges.size(); }
  i32 dart_count() const { return 2 * m(); }
  static i32 twin(i32 d) { return d ^ 1; }
  i32 tail(i32 d) const {
    const EdgeRec& e = edges[d >> 1];
    return (d & 1) ? e.b : e.a;
  }
  i32 head(i32 d) const { return tail(twin(d)); }
  const Weight& weight(i32 d) const {
    const EdgeRec& e = edges[d >> 1];
    return (d & 1) ? e.wba : e.wab;
  }
  Cost cost(i32 d) const {
    const EdgeRec& e = edges[d >> 1];
    const Weight& w = (d & 1) ? e.wba : e.wab;
    if (w.infinite) return Cost{1, (i128)e.pert, 0};
    return Cost{0, ((i128)w.base << kPertBits) + (i128)e.pert, w.base};
  }
  i32 rot_next(i32 d) const {
    const auto& r = rot[tail(d)];
    i32 p = pos_in_rot[d] + 1;
    return r[p == (i32)r.size() ? 0 : p];
  }
  i32 rot_prev(i32 d) const {
    const auto& r = rot[tail(d)];
    i32 p = pos_in_rot[d];
    return r[p == 0 ? (i32)r.size() - 1 : p - 1];
  }
  // Successor dart along the face walk of face_of(d).
  i32 face_next(i32 d) const { return rot_next(twin(d)); }

  i32 add_vertex() {
    rot.emplace_back();
    return n++;
  }
  i32 add_edge(i32 a, i32 b, Weight wab, Weight wba) {
    edges.push_back({a, b, wab, wba, 0});
    return m() - 1;
  }

  i32 degree(i32 v) const { return (i32)rot[v].size(); }
  i32 face_count() const { return (i32)faces.size(); }
  std::vector<i32> face_darts(i32 f) const {
    std::vector<i32> out;
    i32 d = faces[f].first_dart;
    for (i32 i = 0; i < faces[f].len; i++) {
      out.push_back(d);
      d = face_next(d);
    }
    return out;
  }

  // Validates the rotation system and computes faces; throws on a malformed
  // input (dart under wrong tail, missing/dup dart, Euler violation).
  void finalize();

  // Assigns perturbation words to all edges from the scheme.
  void perturb(const Perturbation& p, u64 id_offset = 0);
};

// Dual incidence helpers; the dual vertex set is the face set of g.
struct DualView {
  const EmbeddedGraph& g;
  i32 vertex_count() const { return g.face_count(); }
  // Dual endpoints of embedded edge e: faces on either side.
  std::pair<i32, i32> ends(i32 e) const {
    return {g.face_of[2 * e], g.face_of[2 * e + 1]};
  }
  i32 dual_degree(i32 f) const { return g.faces[f].len; }
};

}  // namespace pdo
