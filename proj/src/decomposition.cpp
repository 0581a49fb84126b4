#include "pdo/decomposition.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace pdo {

namespace {

// Fan of star darts around v_inf. Face f owns the corner at fpos[f]: the
// corner between fan[p] and fan[p + 1] lies in the orbit of fan[p + 1].
struct Fan {
  std::vector<i32> fan;     // tv.rot[0]
  i32 n = 0;
  std::vector<i32> pos_of;  // star edge id -> fan position
  std::vector<i32> fpos;    // face -> fan position

  explicit Fan(const TriVor& tv) {
    if (!tv.rot.empty()) fan = tv.rot[0];
    n = (i32)fan.size();
    pos_of.assign(tv.ne(), -1);
    fpos.assign(tv.face_count, -1);
    for (i32 p = 0; p < n; p++) {
      pos_of[fan[p] >> 1] = p;
      fpos[tv.face_of[fan[(p + 1) % n]]] = p;
    }
  }
};

}  // namespace

std::pair<i32, i32> find_separator(const TriVor& tv, const PieceArc& arc) {
  const i32 m = arc.faces();
  if (m <= 6) throw std::logic_error("piece needs no separator");
  Fan fans(tv);
  std::vector<i32> idx_of(fans.n, -1);
  for (i32 t = 0; t < m; t++) idx_of[arc.pos[t]] = t;
  std::vector<i32> vert(m);
  for (i32 t = 0; t < m; t++) vert[t] = tv.head(fans.fan[arc.pos[t]]);

  // item idx bounds one original face of this piece
  auto adjacency_item = [&](i32 idx) {
    if (idx == m - 1 && !arc.root) return false;
    return arc.pos[(idx + 1) % m] == (arc.pos[idx] + 1) % fans.n;
  };

  // start from any 2-cycle, falling back to the piece boundary
  i32 ci = -1, cj = -1;
  {
    std::vector<i32> first(tv.nv, -1);
    for (i32 t = 0; t < m && ci < 0; t++) {
      i32 w = vert[t];
      if (first[w] >= 0) {
        if (!(first[w] == 0 && t == m - 1)) { ci = first[w]; cj = t; }
      } else {
        first[w] = t;
      }
    }
    if (ci < 0) {
      if (arc.root || vert[0] != vert[m - 1])
        throw std::runtime_error("piece has no 2-cycle");
      ci = 0;
      cj = m - 1;
    }
  }

  for (i32 guard = 0; guard < 4 * m + 10; guard++) {
    i32 in_sz = cj - ci, out_sz = m - in_sz;
    if (3 * std::min(in_sz, out_sz) >= m) return {ci, cj};
    bool big_inner = in_sz > out_sz;
    auto in_big = [&](i32 idx) {
      return (ci <= idx && idx < cj) == big_inner;
    };
    i32 w = vert[ci];

    // a third star dart of w strictly inside the bigger side splits it
    i32 t = -1;
    for (i32 d : tv.rot[w]) {
      if (!tv.edges[d >> 1].star()) continue;
      i32 p = fans.pos_of[d >> 1];
      i32 idx = p >= 0 ? idx_of[p] : -1;
      if (idx < 0 || idx == ci || idx == cj) continue;
      if ((ci < idx && idx < cj) == big_inner) { t = idx; break; }
    }
    if (t >= 0) {
      std::array<i32, 3> o{ci, cj, t};
      std::sort(o.begin(), o.end());
      // the two non-current pairs each cut a pure chunk off the bigger side
      struct Cand { i32 i = -1, j = -1, cut = -1; };
      std::array<Cand, 2> cand{};
      i32 cn = 0;
      auto add = [&](i32 i, i32 j, i32 cut) {
        if (i == ci && j == cj) return;
        cand[cn++] = {i, j, cut};
      };
      add(o[0], o[1], o[1] - o[0]);
      add(o[1], o[2], o[2] - o[1]);
      add(o[0], o[2], m - (o[2] - o[0]));
      Cand pick = cand[0].cut >= cand[1].cut ? cand[0] : cand[1];
      Cand other = cand[0].cut >= cand[1].cut ? cand[1] : cand[0];
      if (pick.i == 0 && pick.j == m - 1 && !arc.root) pick = other;
      ci = pick.i;
      cj = pick.j;
      continue;
    }

    // otherwise walk the one kept edge of w buried in the bigger side
    i32 dk = -1;
    for (i32 d : tv.rot[w]) {
      if (tv.edges[d >> 1].star()) continue;
      bool good = true;
      for (i32 dd : {d, TriVor::twin(d)}) {
        i32 p = fans.fpos[tv.face_of[dd]];
        i32 idx = p >= 0 ? idx_of[p] : -1;
        if (idx < 0 || !adjacency_item(idx) || !in_big(idx)) {
          good = false;
          break;
        }
      }
      if (!good) continue;
      if (dk >= 0) throw std::runtime_error("two kept edges into the bigger side");
      dk = d;
    }
    if (dk < 0) throw std::runtime_error("separator walk is stuck");
    i32 dq = TriVor::twin(dk);
    const auto& r = tv.rot[tv.tail(dq)];
    i32 rn = (i32)r.size();
    i32 pq = tv.pos_in_rot[dq];
    i32 ni = -1, nj = -1;
    for (i32 s : {r[(pq + 1) % rn], r[(pq + rn - 1) % rn]}) {
      if (!tv.edges[s >> 1].star())
        throw std::runtime_error("kept dart lacks star neighbors");
      i32 idx = idx_of[fans.pos_of[s >> 1]];
      if (idx < 0) throw std::runtime_error("star neighbor left the piece");
      (ni < 0 ? ni : nj) = idx;
    }
    ci = std::min(ni, nj);
    cj = std::max(ni, nj);
  }
  throw std::runtime_error("separator walk did not converge");
}

SeparatorRep extract_rep(const TriVor& tv, const VoronoiDiagram& vd, i32 e1,
                         i32 e2) {
  const TriVorEdge& a = tv.edges[e1];
  const TriVorEdge& b = tv.edges[e2];
  if (!a.star() || !b.star() || a.y != b.y || a.cell == b.cell)
    throw std::invalid_argument("not a 2-cycle edge pair");
  SeparatorRep rep;
  rep.through = a.y;
  rep.b1 = vd.site(a.cell);
  rep.b2 = vd.site(b.cell);
  rep.x = a.land;
  rep.y = b.land;
  // the side of the triangle behind the vor vertex must be a host edge
  const EmbeddedGraph& g = vd.host->g;
  bool adj = false;
  for (i32 d : g.face_darts(tv.vert_face[rep.through]))
    if ((g.tail(d) == rep.x && g.head(d) == rep.y) ||
        (g.tail(d) == rep.y && g.head(d) == rep.x))
      adj = true;
  if (!adj) throw std::runtime_error("triangle side is not a host edge");
  return rep;
}

std::vector<i32> cell_path(const VoronoiDiagram& vd, i32 v) {
  std::vector<i32> path{v};
  const EmbeddedGraph& g = vd.host->g;
  while (vd.host->hole_pos[v] == -1) {
    v = g.tail(vd.parent[v]);
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

struct Builder {
  const TriVor& tv;
  const VoronoiDiagram& vd;
  Fan fans;
  DecompTree t;

  i32 make_leaf(const PieceArc& arc) {
    DecompLeaf lf;
    lf.piece_faces = arc.faces();
    i32 m = arc.faces();
    for (i32 idx = 0; idx < m; idx++) {
      if (idx == m - 1 && !arc.root) continue;
      i32 p = arc.pos[idx];
      if (arc.pos[(idx + 1) % m] != (p + 1) % fans.n) continue;
      i32 f = tv.face_of[fans.fan[(p + 1) % fans.n]];
      lf.faces.push_back(f);
      lf.sites.push_back(vd.site(tv.face_cell[f]));
    }
    t.leaves.push_back(std::move(lf));
    return -1 - ((i32)t.leaves.size() - 1);
  }

  i32 build(const PieceArc& arc, i32 depth) {
    t.depth = std::max(t.depth, depth);
    if (arc.faces() <= 6) return make_leaf(arc);
    auto [i, j] = find_separator(tv, arc);
    i32 m = arc.faces();
    DecompNode nd;
    nd.e1 = fans.fan[arc.pos[i]] >> 1;
    nd.e2 = fans.fan[arc.pos[j]] >> 1;
    nd.rep = extract_rep(tv, vd, nd.e1, nd.e2);
    nd.faces = m;
    nd.in_faces = j - i;
    nd.out_faces = m - (j - i);
    i32 id = (i32)t.nodes.size();
    t.nodes.push_back(nd);
    PieceArc in, out;
    in.root = out.root = false;
    in.pos.assign(arc.pos.begin() + i, arc.pos.begin() + j + 1);
    out.pos.assign(arc.pos.begin() + j, arc.pos.end());
    out.pos.insert(out.pos.end(), arc.pos.begin(), arc.pos.begin() + i + 1);
    i32 ci = build(in, depth + 1);
    i32 co = build(out, depth + 1);
    t.nodes[id].inner = ci;
    t.nodes[id].outer = co;
    return id;
  }
};

}  // namespace

DecompTree decompose(const TriVor& tv, const VoronoiDiagram& vd) {
  Builder b{tv, vd, Fan(tv), {}};
  PieceArc root;
  root.root = true;
  for (i32 p = 0; p < b.fans.n; p++) root.pos.push_back(p);
  b.t.root = b.build(root, 0);
  return b.t;
}

DecompAudit audit_decomposition(const DecompTree& t, const TriVor& tv,
                                const VoronoiDiagram& vd) {
  DecompAudit a;
  auto flag = [&](std::string s) {
    a.ok = false;
    a.problems.push_back(std::move(s));
  };
  auto piece_faces = [&](i32 ref) {
    return ref < 0 ? t.leaves[-1 - ref].piece_faces : t.nodes[ref].faces;
  };
  std::vector<i32> seen(tv.face_count, 0);
  std::vector<std::pair<i32, i32>> stack{{t.root, 0}};
  while (!stack.empty()) {
    auto [ref, depth] = stack.back();
    stack.pop_back();
    a.depth = std::max(a.depth, depth);
    if (ref < 0) {
      const DecompLeaf& lf = t.leaves[-1 - ref];
      if (lf.piece_faces > 6) flag("oversized leaf");
      if ((i32)lf.faces.size() > lf.piece_faces) flag("leaf face overflow");
      if (lf.faces.size() != lf.sites.size()) flag("leaf site count");
      a.max_leaf_faces = std::max(a.max_leaf_faces, lf.piece_faces);
      for (i32 q = 0; q < (i32)lf.faces.size(); q++) {
        i32 f = lf.faces[q];
        if (f < 0 || f >= tv.face_count) {
          flag("leaf face id out of range");
          continue;
        }
        seen[f]++;
        if (lf.sites[q] != vd.site(tv.face_cell[f])) flag("leaf site mismatch");
      }
      continue;
    }
    const DecompNode& nd = t.nodes[ref];
    if (nd.in_faces + nd.out_faces != nd.faces) flag("side counts");
    i32 lo = (nd.faces + 2) / 3, hi = 2 * nd.faces / 3;
    if (nd.in_faces < lo || nd.in_faces > hi) flag("unbalanced cut");
    if (piece_faces(nd.inner) != nd.in_faces + 1) flag("inner child size");
    if (piece_faces(nd.outer) != nd.out_faces + 1) flag("outer child size");

    const TriVorEdge& e1 = tv.edges[nd.e1];
    const TriVorEdge& e2 = tv.edges[nd.e2];
    if (!e1.star() || !e2.star() || e1.y != e2.y || e1.cell == e2.cell) {
      flag("cut is not a 2-cycle");
    } else {
      const SeparatorRep& rep = nd.rep;
      if (rep.through != e1.y || rep.b1 != vd.site(e1.cell) ||
          rep.b2 != vd.site(e2.cell) || rep.x != e1.land || rep.y != e2.land)
        flag("rep does not match its cut");
      if (vd.cell_of[rep.x] != e1.cell || vd.cell_of[rep.y] != e2.cell)
        flag("rep endpoint in the wrong cell");
      std::vector<i32> p1 = cell_path(vd, rep.x);
      std::vector<i32> p2 = cell_path(vd, rep.y);
      if (p1.front() != rep.b1 || p2.front() != rep.b2)
        flag("rep path starts off-site");
      std::unordered_set<i32> on1(p1.begin(), p1.end());
      for (i32 v : p2)
        if (on1.count(v)) {
          flag("rep paths intersect");
          break;
        }
    }
    stack.push_back({nd.inner, depth + 1});
    stack.push_back({nd.outer, depth + 1});
  }
  for (i32 f = 0; f < tv.face_count; f++)
    if (seen[f] != 1) flag("faces not partitioned across leaves");
  i32 total = piece_faces(t.root);
  if (total > 1) {
    i32 bound = (i32)std::ceil(std::log((double)total) / std::log(1.5)) + 2;
    if (a.depth > bound) flag("decomposition too deep");
  }
  return a;
}

}  // namespace pdo
