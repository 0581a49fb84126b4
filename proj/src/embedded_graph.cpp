#include "pdo/embedded_graph.hpp"

#include <algorithm>
#include <set>

namespace pdo {

void EmbeddedGraph::finalize() {
  i32 nd = dart_count();
  pos_in_rot.assign(nd, -1);
  if ((i32)rot.size() != n) throw std::runtime_error("rotation table size != n");
  for (i32 v = 0; v < n; v++) {
    for (i32 i = 0; i < (i32)rot[v].size(); i++) {
      i32 d = rot[v][i];
      if (d < 0 || d >= nd) throw std::runtime_error("rotation refers to unknown dart");
      if (tail(d) != v)
        throw std::runtime_error("dart listed under vertex that is not its tail");
      if (pos_in_rot[d] != -1) throw std::runtime_error("dart listed twice in rotations");
      pos_in_rot[d] = i;
    }
  }
  for (i32 d = 0; d < nd; d++)
    if (pos_in_rot[d] == -1) throw std::runtime_error("dart missing from rotations");

  if (!allow_multi) {
    std::set<std::pair<i32, i32>> seen;
    for (const EdgeRec& e : edges) {
      if (e.a == e.b) throw std::runtime_error("self-loop in input graph");
      auto key = std::minmax(e.a, e.b);
      if (!seen.insert({key.first, key.second}).second)
        throw std::runtime_error("parallel edge in input graph");
    }
  }

  // Face orbits of d -> rot_next(twin(d)).
  face_of.assign(nd, -1);
  faces.clear();
  for (i32 d0 = 0; d0 < nd; d0++) {
    if (face_of[d0] != -1) continue;
    i32 f = (i32)faces.size();
    faces.push_back({d0, 0});
    i32 d = d0;
    do {
      face_of[d] = f;
      faces[f].len++;
      d = face_next(d);
    } while (d != d0);
  }

  // Euler check per connected component.
  std::vector<i32> comp(n, -1);
  components = 0;
  std::vector<i32> stack;
  for (i32 s = 0; s < n; s++) {
    if (comp[s] != -1) continue;
    i32 c = components++;
    stack.push_back(s);
    comp[s] = c;
    while (!stack.empty()) {
      i32 v = stack.back();
      stack.pop_back();
      for (i32 d : rot[v]) {
        i32 u = head(d);
        if (comp[u] == -1) {
          comp[u] = c;
          stack.push_back(u);
        }
      }
    }
  }
  std::vector<i64> cn(components, 0), cm(components, 0), cf(components, 0);
  for (i32 v = 0; v < n; v++) cn[comp[v]]++;
  for (const EdgeRec& e : edges) cm[comp[e.a]]++;
  for (const FaceRec& fr : faces) cf[comp[tail(fr.first_dart)]]++;
  for (i32 c = 0; c < components; c++) {
    if (cm[c] == 0) continue;  // isolated vertex: no darts, no faces counted
    if (cn[c] - cm[c] + cf[c] != 2)
      throw std::runtime_error("rotation system is not a planar embedding (Euler check)");
  }
}

void EmbeddedGraph::perturb(const Perturbation& p, u64 id_offset) {
  for (i32 e = 0; e < m(); e++) edges[e].pert = p.word(id_offset + (u64)e);
}

}  // namespace pdo
