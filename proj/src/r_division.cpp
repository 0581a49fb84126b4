#include "pdo/r_division.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace pdo {

namespace {

struct RawPiece {
  EmbeddedGraph g;                 // inherited sub-embedding, allow_multi
  std::vector<i32> v_global;
  std::vector<i32> e_global;
  std::vector<char> face_is_hole;  // face of g that is not a face of G
  i32 hole_count = 0;
};

RawPiece raw_subembedding(const EmbeddedGraph& G, const std::vector<i32>& edge_ids) {
  RawPiece p;
  p.g.allow_multi = true;
  p.e_global = edge_ids;
  std::vector<i32> local_of(G.n, -1);
  auto local = [&](i32 gv) {
    if (local_of[gv] == -1) {
      local_of[gv] = p.g.add_vertex();
      p.v_global.push_back(gv);
    }
    return local_of[gv];
  };
  std::vector<i32> local_edge(G.m(), -1);
  for (i32 ge : edge_ids) {
    const EdgeRec& e = G.edges[ge];
    i32 le = p.g.add_edge(local(e.a), local(e.b), e.wab, e.wba);
    p.g.edges[le].pert = e.pert;
    local_edge[ge] = le;
  }
  // Rotations inherit the global clockwise order.
  for (i32 lv = 0; lv < p.g.n; lv++) {
    i32 gv = p.v_global[lv];
    for (i32 gd : G.rot[gv]) {
      i32 le = local_edge[gd >> 1];
      if (le != -1) p.g.rot[lv].push_back(2 * le + (gd & 1));
    }
  }
  p.g.finalize();
  // A local face is a face of G iff all its darts lie on one global face of
  // equal length.
  p.face_is_hole.assign(p.g.face_count(), 0);
  for (i32 f = 0; f < p.g.face_count(); f++) {
    i32 d0 = p.g.faces[f].first_dart;
    i32 gd0 = 2 * p.e_global[d0 >> 1] + (d0 & 1);
    i32 gf = G.face_of[gd0];
    bool real = G.faces[gf].len == p.g.faces[f].len;
    if (real) {
      i32 d = d0;
      for (i32 i = 0; i < p.g.faces[f].len && real; i++) {
        i32 gd = 2 * p.e_global[d >> 1] + (d & 1);
        if (G.face_of[gd] != gf) real = false;
        d = p.g.face_next(d);
      }
    }
    if (!real) {
      p.face_is_hole[f] = 1;
      p.hole_count++;
    }
  }
  return p;
}

// ---- separator-based divider ------------------------------------------------

// Splits the edge list into connected components (within the subgraph).
std::vector<std::vector<i32>> edge_components(const EmbeddedGraph& G,
                                              const std::vector<i32>& edge_ids) {
  std::vector<std::vector<i32>> comps;
  std::vector<std::vector<std::pair<i32, i32>>> adj;  // local adjacency
  std::vector<i32> local_of(G.n, -1), verts;
  auto local = [&](i32 gv) {
    if (local_of[gv] == -1) {
      local_of[gv] = (i32)verts.size();
      verts.push_back(gv);
      adj.emplace_back();
    }
    return local_of[gv];
  };
  for (size_t i = 0; i < edge_ids.size(); i++) {
    const EdgeRec& e = G.edges[edge_ids[i]];
    i32 a = local(e.a), b = local(e.b);
    adj[a].push_back({b, (i32)i});
    adj[b].push_back({a, (i32)i});
  }
  std::vector<char> evis(edge_ids.size(), 0), vvis(verts.size(), 0);
  for (size_t s = 0; s < verts.size(); s++) {
    if (vvis[s]) continue;
    std::vector<i32> stack = {(i32)s};
    vvis[s] = 1;
    std::vector<i32> comp;
    while (!stack.empty()) {
      i32 v = stack.back();
      stack.pop_back();
      for (auto [u, ei] : adj[v]) {
        if (!evis[ei]) {
          evis[ei] = 1;
          comp.push_back(edge_ids[ei]);
        }
        if (!vvis[u]) {
          vvis[u] = 1;
          stack.push_back(u);
        }
      }
    }
    if (!comp.empty()) comps.push_back(std::move(comp));
  }
  return comps;
}

// Fallback split with guaranteed progress: cut a BFS spanning tree at the
// vertex balancing subtree sizes; edges touching the subtree go inside.
std::pair<std::vector<i32>, std::vector<i32>> tree_split(
    const EmbeddedGraph& G, const std::vector<i32>& edge_ids) {
  RawPiece p = raw_subembedding(G, edge_ids);
  const EmbeddedGraph& S = p.g;
  i32 n = S.n, m = S.m();
  std::vector<i32> par(n, -1), order;
  std::vector<char> seen(n, 0);
  order.reserve(n);
  {
    std::vector<i32> q = {0};
    seen[0] = 1;
    for (size_t hh = 0; hh < q.size(); hh++) {
      i32 v = q[hh];
      order.push_back(v);
      for (i32 d : S.rot[v]) {
        i32 u = S.head(d);
        if (!seen[u]) {
          seen[u] = 1;
          par[u] = v;
          q.push_back(u);
        }
      }
    }
  }
  std::vector<i32> sz(n, 1);
  for (i32 i = n - 1; i >= 1; i--) sz[par[order[i]]] += sz[order[i]];
  i32 best_v = -1, worst = n + 1;
  for (i32 v = 1; v < n; v++)
    if (std::max(sz[v], n - sz[v]) < worst) {
      worst = std::max(sz[v], n - sz[v]);
      best_v = v;
    }
  if (best_v == -1) throw std::runtime_error("divider: single-vertex piece");
  std::vector<char> below(n, 0);
  for (i32 v : order)
    if (v == best_v || (par[v] != -1 && below[par[v]])) below[v] = 1;
  std::vector<i32> in_e, out_e;
  for (i32 e = 0; e < m; e++)
    ((below[S.edges[e].a] || below[S.edges[e].b]) ? in_e : out_e)
        .push_back(p.e_global[e]);
  if (in_e.empty() || out_e.empty())
    throw std::runtime_error("divider: tree split failed");
  return {in_e, out_e};
}

// One balanced fundamental-cycle split of a connected piece. Returns the two
// edge sets (inside keeps the cycle edges). balance_holes weights only hole
// faces when choosing the cycle.
std::pair<std::vector<i32>, std::vector<i32>> cycle_split(
    const EmbeddedGraph& G, const std::vector<i32>& edge_ids, bool balance_holes) {
  RawPiece p = raw_subembedding(G, edge_ids);
  const EmbeddedGraph& S = p.g;
  i32 n = S.n, m = S.m(), F = S.face_count();

  // BFS spanning tree of the primal piece.
  std::vector<i32> par_edge(n, -1), depth(n, 0);
  std::vector<char> intree(m, 0), vvis(n, 0);
  {
    std::vector<i32> q = {0};
    vvis[0] = 1;
    for (size_t h = 0; h < q.size(); h++) {
      i32 v = q[h];
      for (i32 d : S.rot[v]) {
        i32 u = S.head(d);
        if (!vvis[u]) {
          vvis[u] = 1;
          par_edge[u] = d >> 1;
          depth[u] = depth[v] + 1;
          intree[d >> 1] = 1;
          q.push_back(u);
        }
      }
    }
  }
  // Non-tree edges form a spanning tree of the dual; BFS it from face 0.
  std::vector<std::vector<std::pair<i32, i32>>> dadj(F);  // (face, primal edge)
  for (i32 e = 0; e < m; e++) {
    if (intree[e]) continue;
    i32 f1 = S.face_of[2 * e], f2 = S.face_of[2 * e + 1];
    dadj[f1].push_back({f2, e});
    dadj[f2].push_back({f1, e});
  }
  std::vector<i32> dpar_edge(F, -1), dorder;
  std::vector<char> fvis(F, 0);
  std::vector<i32> dpar(F, -1);
  dorder.reserve(F);
  {
    std::vector<i32> q = {0};
    fvis[0] = 1;
    for (size_t h = 0; h < q.size(); h++) {
      i32 f = q[h];
      dorder.push_back(f);
      for (auto [f2, e] : dadj[f])
        if (!fvis[f2]) {
          fvis[f2] = 1;
          dpar[f2] = f;
          dpar_edge[f2] = e;
          q.push_back(f2);
        }
    }
  }
  std::vector<i64> wt(F, 0), sub(F, 0);
  i64 total = 0;
  for (i32 f = 0; f < F; f++) {
    wt[f] = balance_holes ? (p.face_is_hole[f] ? 1 : 0) : 1;
    total += wt[f];
  }
  for (i32 i = F - 1; i >= 0; i--) {
    i32 f = dorder[i];
    sub[f] += wt[f];
    if (dpar[f] != -1) sub[dpar[f]] += sub[f];
  }
  i32 best_face = -1;
  i64 best = -1;
  for (i32 f = 1; f < F; f++) {
    if (dpar_edge[f] == -1) continue;
    i64 worst = std::max(sub[f], total - sub[f]);
    if (best_face == -1 || worst < best) {
      best = worst;
      best_face = f;
    }
  }
  if (best_face == -1) return tree_split(G, edge_ids);
  i32 ce = dpar_edge[best_face];

  // Fundamental cycle of ce w.r.t. the primal tree.
  std::vector<char> oncycle(m, 0);
  oncycle[ce] = 1;
  i32 a = S.edges[ce].a, b = S.edges[ce].b;
  while (a != b) {
    if (depth[a] < depth[b]) std::swap(a, b);
    oncycle[par_edge[a]] = 1;
    a = (S.edges[par_edge[a]].a == a) ? S.edges[par_edge[a]].b : S.edges[par_edge[a]].a;
  }
  // Faces below ce in the dual tree are "inside".
  std::vector<char> inside_face(F, 0);
  {
    std::vector<i32> q = {best_face};
    inside_face[best_face] = 1;
    for (size_t h = 0; h < q.size(); h++) {
      i32 f = q[h];
      for (auto [f2, e] : dadj[f])
        if (!inside_face[f2] && dpar[f2] == f && dpar_edge[f2] == e) {
          inside_face[f2] = 1;
          q.push_back(f2);
        }
    }
  }
  // Cycle edges go to both sides: each side is then a union of closed faces
  // plus its bounding cycle, so duplication never detaches an edge.
  std::vector<i32> in_edges, out_edges;
  for (i32 e = 0; e < m; e++) {
    if (oncycle[e]) {
      in_edges.push_back(p.e_global[e]);
      out_edges.push_back(p.e_global[e]);
    } else if (inside_face[S.face_of[2 * e]]) {
      in_edges.push_back(p.e_global[e]);
    } else {
      out_edges.push_back(p.e_global[e]);
    }
  }
  return {in_edges, out_edges};
}

void divide_recursive(const EmbeddedGraph& G, std::vector<i32> edge_ids, i32 r,
                      const DividerOptions& opt,
                      std::vector<std::vector<i32>>& out, i32 depth) {
  if (depth > 64) throw std::runtime_error("divider: recursion too deep");
  RawPiece p = raw_subembedding(G, edge_ids);
  if (p.g.n <= r && p.hole_count <= opt.hole_bound) {
    out.push_back(std::move(edge_ids));
    return;
  }
  bool balance_holes = p.hole_count > opt.hole_bound / 2;
  auto degenerate = [&](const std::vector<i32>& a, const std::vector<i32>& b) {
    return a.empty() || b.empty() || a.size() == edge_ids.size() ||
           b.size() == edge_ids.size();
  };
  auto [in_e, out_e] = cycle_split(G, edge_ids, balance_holes);
  if (degenerate(in_e, out_e))
    std::tie(in_e, out_e) = cycle_split(G, edge_ids, !balance_holes);
  if (degenerate(in_e, out_e)) std::tie(in_e, out_e) = tree_split(G, edge_ids);
  if (degenerate(in_e, out_e)) {
    // Last resort: halve the edge list; components are re-split below anyway.
    in_e.assign(edge_ids.begin(), edge_ids.begin() + edge_ids.size() / 2);
    out_e.assign(edge_ids.begin() + edge_ids.size() / 2, edge_ids.end());
  }
  for (auto* side : {&in_e, &out_e})
    for (auto& comp : edge_components(G, *side))
      divide_recursive(G, std::move(comp), r, opt, out, depth + 1);
}

// ---- grid tiler -------------------------------------------------------------

// Assigns every edge to the block of one of its incident cells so that the
// triangle on that side is wholly inside the block: horizontals to the upper
// cell, verticals to the left cell, diagonals to their own cell. Where block
// lines cross (and at the right/bottom border crossings) a few edges switch
// sides so the flanking triangle stays complete; otherwise the crossing
// vertex would shed single-edge fragments during hole normalization.
std::vector<std::vector<i32>> tile_grid(const EmbeddedGraph& G, i32 r) {
  i32 w = G.grid_w, h = G.grid_h;
  if ((i64)G.m() != (i64)(w - 1) * h + (i64)w * (h - 1) + (i64)(w - 1) * (h - 1))
    throw std::runtime_error("grid tiler needs the diagonal augmentation");
  if (r < 16) throw std::runtime_error("grid tiler needs r >= 16");
  i32 side = (i32)std::floor(std::sqrt((double)r));
  // Balanced per-axis partition of the cell range into parts of at most s
  // cells; with s >= 3 (or a single part) every part gets >= 2 cells, which
  // keeps one-part-wide blocks from degenerating into triangle chains.
  auto parts = [&](i32 len, i32 dim_cap) {
    i32 s = std::max(1, std::min(side, dim_cap) - 1);
    i32 k = (len + s - 1) / s;
    std::vector<i32> cut(k + 1);
    for (i32 i = 0; i <= k; i++) cut[i] = (i32)((i64)len * i / k);
    return cut;
  };
  auto cutx = parts(w - 1, w), cuty = parts(h - 1, h);
  i32 TI = (i32)cutx.size() - 1, TJ = (i32)cuty.size() - 1;
  std::vector<i32> bI(w - 1), bJ(h - 1);
  std::vector<char> vline(w, 0), hline(h, 0);
  for (i32 i = 0; i < TI; i++) {
    if (TI > 1 && cutx[i + 1] - cutx[i] < 2)
      throw std::runtime_error("grid tiler: degenerate part");
    for (i32 c = cutx[i]; c < cutx[i + 1]; c++) bI[c] = i;
    if (i > 0) vline[cutx[i]] = 1;
  }
  for (i32 j = 0; j < TJ; j++) {
    if (TJ > 1 && cuty[j + 1] - cuty[j] < 2)
      throw std::runtime_error("grid tiler: degenerate part");
    for (i32 c = cuty[j]; c < cuty[j + 1]; c++) bJ[c] = j;
    if (j > 0) hline[cuty[j]] = 1;
  }
  std::vector<std::vector<i32>> tiles(TI * TJ);
  for (i32 e = 0; e < G.m(); e++) {
    i32 a = G.edges[e].a, b = G.edges[e].b;
    i32 ax = a % w, ay = a / w;
    i32 cx, cy;
    if (b == a + 1) {            // horizontal (ax..ax+1, ay)
      cx = ax;
      cy = ay > 0 ? ay - 1 : 0;
      if (ax == w - 2 && hline[ay]) cy = ay;
    } else if (b == a + w) {     // vertical (ax, ay..ay+1)
      cx = ax > 0 ? ax - 1 : 0;
      cy = ay;
      if (vline[ax] && (hline[ay] || hline[ay + 1] || ay + 1 == h - 1))
        cx = ax;
    } else if (b == a + w + 1) { // diagonal of cell (ax, ay)
      cx = ax;
      cy = ay;
    } else {
      throw std::runtime_error("grid tiler: unexpected edge shape");
    }
    tiles[bJ[cy] * TI + bI[cx]].push_back(e);
  }
  std::vector<std::vector<i32>> out;
  for (auto& tile : tiles)
    if (!tile.empty()) out.push_back(std::move(tile));
  return out;
}

// ---- normalization ----------------------------------------------------------

void insert_before(std::vector<i32>& rotv, i32 before, i32 nd) {
  for (size_t i = 0; i < rotv.size(); i++)
    if (rotv[i] == before) {
      rotv.insert(rotv.begin() + i, nd);
      return;
    }
  throw std::runtime_error("internal: dart not found in rotation");
}

// Vertex duplication of a raw piece: every hole-corner visit starts a new
// copy, so each copy keeps a contiguous sector of the rotation.
struct Duplicated {
  RawPiece raw;
  std::vector<char> hole_dart;             // raw dart lies on a hole walk
  std::vector<i32> dart_owner;             // raw dart -> copy
  std::vector<i32> copy_global;            // copy -> global vertex
  std::vector<std::vector<i32>> copy_rot;  // copy -> raw darts, cw
};

Duplicated duplicate_piece(const EmbeddedGraph& G, const std::vector<i32>& edge_ids) {
  Duplicated D;
  D.raw = raw_subembedding(G, edge_ids);
  const RawPiece& raw = D.raw;
  D.hole_dart.assign(raw.g.dart_count(), 0);
  // Gap list per vertex: for every hole-corner (visit), the departure dart.
  // The corner of visit i sits between twin(d_{i-1}) and d_i; sectors between
  // consecutive gaps become vertex copies.
  std::vector<std::vector<i32>> gaps(raw.g.n);  // rotation positions of departures
  for (i32 f = 0; f < raw.g.face_count(); f++) {
    if (!raw.face_is_hole[f]) continue;
    for (i32 d : raw.g.face_darts(f)) {
      D.hole_dart[d] = 1;
      gaps[raw.g.tail(d)].push_back(raw.g.pos_in_rot[d]);
    }
  }
  D.dart_owner.assign(raw.g.dart_count(), -1);
  for (i32 v = 0; v < raw.g.n; v++) {
    auto& gp = gaps[v];
    std::sort(gp.begin(), gp.end());
    i32 copies = (i32)std::max<size_t>(1, gp.size());
    i32 deg = raw.g.degree(v);
    for (i32 c = 0; c < copies; c++) {
      i32 nv = (i32)D.copy_rot.size();
      D.copy_rot.emplace_back();
      D.copy_global.push_back(raw.v_global[v]);
      i32 from = gp.empty() ? 0 : gp[c];
      i32 len = (copies <= 1) ? deg : (gp[(c + 1) % copies] - from + deg) % deg;
      for (i32 k = 0; k < len; k++) {
        i32 d = raw.g.rot[v][(from + k) % deg];
        D.copy_rot[nv].push_back(d);
        D.dart_owner[d] = nv;
      }
    }
  }
  return D;
}

// Connected components of a piece after duplication. A cut can leave an edge
// whose both incident faces end up outside its side; duplication then detaches
// it, so each component becomes its own region.
std::vector<std::vector<i32>> pinch_split(const EmbeddedGraph& G,
                                          const std::vector<i32>& edge_ids) {
  Duplicated D = duplicate_piece(G, edge_ids);
  i32 nc = (i32)D.copy_rot.size();
  std::vector<i32> uf(nc);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<i32(i32)> find = [&](i32 x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (i32 e = 0; e < D.raw.g.m(); e++)
    uf[find(D.dart_owner[2 * e])] = find(D.dart_owner[2 * e + 1]);
  std::vector<std::vector<i32>> comps;
  std::vector<i32> comp_of(nc, -1);
  for (i32 e = 0; e < D.raw.g.m(); e++) {
    i32 root = find(D.dart_owner[2 * e]);
    if (comp_of[root] == -1) {
      comp_of[root] = (i32)comps.size();
      comps.emplace_back();
    }
    comps[comp_of[root]].push_back(D.raw.e_global[e]);
  }
  return comps;
}

Region normalize_region(const EmbeddedGraph& G, const std::vector<i32>& edge_ids,
                        const Perturbation& pert, u64 aug_id_base) {
  Duplicated D = duplicate_piece(G, edge_ids);
  const RawPiece& raw = D.raw;
  const std::vector<char>& hole_dart = D.hole_dart;
  const std::vector<i32>& dart_owner = D.dart_owner;

  Region reg;
  reg.g.allow_multi = true;
  reg.g.n = (i32)D.copy_rot.size();
  reg.g.rot = D.copy_rot;  // raw dart ids; edges keep their ids
  reg.v_global = D.copy_global;
  // Copy edges, remapping endpoints by dart ownership (dart ids unchanged).
  for (i32 e = 0; e < raw.g.m(); e++) {
    const EdgeRec& er = raw.g.edges[e];
    i32 ne = reg.g.add_edge(dart_owner[2 * e], dart_owner[2 * e + 1], er.wab, er.wba);
    reg.g.edges[ne].pert = er.pert;
    reg.e_global.push_back(raw.e_global[e]);
    reg.e_aug.push_back(AugKind::none);
  }
  reg.g.finalize();

  // Triangulate every non-hole face of length > 3 with infinite chords.
  u64 aug_idx = 0;
  auto face_walks = [&]() {
    std::vector<std::vector<i32>> walks;
    for (i32 f = 0; f < reg.g.face_count(); f++) walks.push_back(reg.g.face_darts(f));
    return walks;
  };
  {
    auto walks = face_walks();
    for (i32 f = 0; f < (i32)walks.size(); f++) {
      auto& W = walks[f];
      if (hole_dart[W[0]]) continue;
      while (W.size() > 3) {
        i32 v0 = reg.g.tail(W[0]), v2 = reg.g.tail(W[2]);
        if (v0 == v2) throw std::runtime_error("normalize: non-simple region face");
        i32 ce = reg.g.add_edge(v0, v2, {0, true}, {0, true});
        reg.g.edges[ce].pert = pert.word(aug_id_base + aug_idx++);
        reg.e_global.push_back(-1);
        reg.e_aug.push_back(AugKind::chord);
        insert_before(reg.g.rot[v0], W[0], 2 * ce);
        insert_before(reg.g.rot[v2], W[2], 2 * ce + 1);
        std::vector<i32> next = {2 * ce};
        next.insert(next.end(), W.begin() + 2, W.end());
        W = std::move(next);
      }
    }
  }
  reg.g.finalize();

  // Holes: faces whose darts were hole-walk darts (dart ids are stable and
  // chords never touch hole faces).
  reg.on_hole.assign(reg.g.n, 0);
  for (i32 f = 0; f < reg.g.face_count(); f++) {
    i32 d0 = reg.g.faces[f].first_dart;
    if (d0 >= (i32)hole_dart.size() || !hole_dart[d0]) continue;
    Hole H;
    H.face = f;
    i32 d = d0;
    for (i32 i = 0; i < reg.g.faces[f].len; i++) {
      H.darts.push_back(d);
      H.verts.push_back(reg.g.tail(d));
      reg.on_hole[reg.g.tail(d)] = 1;
      d = reg.g.face_next(d);
    }
    // Simplicity: every copy at most once per hole.
    auto vs = H.verts;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      throw std::runtime_error("normalize: hole walk not simple after duplication");
    reg.holes.push_back(std::move(H));
  }

  for (i32 v = 0; v < reg.g.n; v++) reg.globals.push_back(reg.v_global[v]);
  std::sort(reg.globals.begin(), reg.globals.end());
  reg.globals.erase(std::unique(reg.globals.begin(), reg.globals.end()),
                    reg.globals.end());
  for (i32 v = 0; v < reg.g.n; v++)
    if (reg.on_hole[v]) reg.boundary_globals.push_back(reg.v_global[v]);
  std::sort(reg.boundary_globals.begin(), reg.boundary_globals.end());
  reg.boundary_globals.erase(
      std::unique(reg.boundary_globals.begin(), reg.boundary_globals.end()),
      reg.boundary_globals.end());
  return reg;
}

}  // namespace

EmbeddedGraph augment_grid(const EmbeddedGraph& g) {
  i32 w = g.grid_w, h = g.grid_h;
  if (w < 2 || h < 2) throw std::runtime_error("augment_grid needs a grid");
  auto id = [&](i32 x, i32 y) { return y * w + x; };
  std::vector<i32> right(g.n, -1), down(g.n, -1);
  for (i32 e = 0; e < g.m(); e++) {
    i32 a = g.edges[e].a, b = g.edges[e].b;
    if (b == a + 1)
      right[a] = e;
    else if (b == a + w)
      down[a] = e;
    else
      throw std::runtime_error("augment_grid: unexpected edge shape");
  }
  EmbeddedGraph a;
  a.allow_multi = g.allow_multi;
  a.grid_w = w;
  a.grid_h = h;
  a.n = g.n;
  a.rot.resize(a.n);
  a.edges = g.edges;
  std::vector<i32> diag((w - 1) * (h - 1));
  for (i32 y = 0; y + 1 < h; y++)
    for (i32 x = 0; x + 1 < w; x++)
      diag[y * (w - 1) + x] =
          a.add_edge(id(x, y), id(x + 1, y + 1), {0, true}, {0, true});
  for (i32 y = 0; y < h; y++)
    for (i32 x = 0; x < w; x++) {
      auto& r = a.rot[id(x, y)];
      if (y > 0) r.push_back(2 * down[id(x, y - 1)] + 1);              // up
      if (x + 1 < w) r.push_back(2 * right[id(x, y)]);                 // right
      if (x + 1 < w && y + 1 < h) r.push_back(2 * diag[y * (w - 1) + x]);
      if (y + 1 < h) r.push_back(2 * down[id(x, y)]);                  // down
      if (x > 0) r.push_back(2 * right[id(x - 1, y)] + 1);             // left
      if (x > 0 && y > 0) r.push_back(2 * diag[(y - 1) * (w - 1) + x - 1] + 1);
    }
  a.finalize();
  return a;
}

EmbeddedGraph triangulate_all(const EmbeddedGraph& g) {
  EmbeddedGraph t = g;
  t.allow_multi = true;
  for (i32 f = 0; f < g.face_count(); f++) {
    std::vector<i32> W = g.face_darts(f);
    while (W.size() > 3) {
      i32 v0 = t.tail(W[0]), v2 = t.tail(W[2]);
      if (v0 == v2) throw std::runtime_error("triangulate_all: non-simple face");
      i32 ce = t.add_edge(v0, v2, {0, true}, {0, true});
      insert_before(t.rot[v0], W[0], 2 * ce);
      insert_before(t.rot[v2], W[2], 2 * ce + 1);
      std::vector<i32> next = {2 * ce};
      next.insert(next.end(), W.begin() + 2, W.end());
      W = std::move(next);
    }
  }
  t.finalize();
  return t;
}

RDivision build_r_division(const EmbeddedGraph& g, i32 r, DividerOptions opt) {
  if (r < 2) throw std::runtime_error("r must be >= 2");
  std::vector<std::vector<i32>> pieces;
  if (g.n <= r) {
    std::vector<i32> all(g.m());
    std::iota(all.begin(), all.end(), 0);
    pieces.push_back(std::move(all));
  } else if (g.grid_w > 1 && !opt.force_separator && r >= 16) {
    pieces = tile_grid(g, r);
  } else {
    if (g.components != 1)
      throw std::runtime_error("separator divider needs a connected graph");
    std::vector<i32> all(g.m());
    std::iota(all.begin(), all.end(), 0);
    divide_recursive(g, std::move(all), r, opt, pieces, 0);
  }

  RDivision div;
  div.r = r;
  div.region_of_edge.assign(g.m(), -1);
  // Augmentation words draw from the same stream as edge words, in a disjoint
  // id window per region.
  std::vector<std::vector<i32>> final_pieces;
  for (auto& piece : pieces)
    for (auto& comp : pinch_split(g, piece)) final_pieces.push_back(std::move(comp));
  for (size_t i = 0; i < final_pieces.size(); i++) {
    Region reg = normalize_region(g, final_pieces[i], opt.aug_pert,
                                  (u64)g.m() + (u64)i * 1000000ULL);
    for (i32 ge : final_pieces[i])
      if (div.region_of_edge[ge] == -1) div.region_of_edge[ge] = (i32)i;
    div.regions.push_back(std::move(reg));
  }
  div.regions_of_vertex.assign(g.n, {});
  for (size_t i = 0; i < div.regions.size(); i++)
    for (i32 gv : div.regions[i].globals)
      div.regions_of_vertex[gv].push_back((i32)i);
  div.is_boundary.assign(g.n, 0);
  for (auto& reg : div.regions)
    for (i32 gv : reg.boundary_globals) div.is_boundary[gv] = 1;
  // Vertices in several regions are boundary by definition.
  for (i32 v = 0; v < g.n; v++)
    if (div.regions_of_vertex[v].size() > 1) div.is_boundary[v] = 1;
  div.boundary_index.assign(g.n, -1);
  for (i32 v = 0; v < g.n; v++)
    if (div.is_boundary[v]) {
      div.boundary_index[v] = (i32)div.boundary_list.size();
      div.boundary_list.push_back(v);
    }
  return div;
}

DivisionAudit audit_division(const EmbeddedGraph& g, const RDivision& div, i32 r,
                             const DividerOptions& opt) {
  DivisionAudit a;
  auto fail = [&](const std::string& s) {
    a.ok = false;
    a.problems.push_back(s);
  };
  a.region_count = (i32)div.regions.size();
  for (i32 e = 0; e < g.m(); e++)
    if (div.region_of_edge[e] == -1) fail("edge not covered by any region");
  for (size_t i = 0; i < div.regions.size(); i++) {
    const Region& reg = div.regions[i];
    a.max_region_vertices = std::max(a.max_region_vertices, (i32)reg.globals.size());
    a.boundary_total += (i64)reg.boundary_globals.size();
    a.max_holes = std::max(a.max_holes, (i32)reg.holes.size());
    if ((i32)reg.globals.size() > r) fail("region exceeds r vertices");
    if ((i32)reg.holes.size() > opt.hole_bound) fail("region exceeds hole bound");
    for (i32 f = 0; f < reg.g.face_count(); f++) {
      bool is_hole = false;
      for (auto& H : reg.holes) is_hole |= (H.face == f);
      if (!is_hole && reg.g.faces[f].len != 3)
        fail("non-hole region face is not a triangle");
    }
    if (reg.g.components != 1) fail("region graph disconnected");
    // Edges leaving the region must leave through hole vertices.
    std::vector<char> in_region(g.n, 0), on_hole_g(g.n, 0);
    for (i32 gv : reg.globals) in_region[gv] = 1;
    for (i32 gv : reg.boundary_globals) on_hole_g[gv] = 1;
    for (i32 gv : reg.globals)
      for (i32 d : g.rot[gv])
        if (div.region_of_edge[d >> 1] != (i32)i && !on_hole_g[gv]) {
          fail("vertex with outside edge not on a hole walk");
          break;
        }
  }
  if (g.n > r) {
    double bound_regions = (double)opt.c1 * g.n / r + 1;
    if (a.region_count > bound_regions) fail("too many regions");
    double bound_boundary = (double)opt.c2 * g.n / std::sqrt((double)r) + 1;
    if ((double)a.boundary_total > bound_boundary) fail("boundary too large");
  }
  // Interior vertices live in exactly one region.
  for (i32 v = 0; v < g.n; v++) {
    if (div.regions_of_vertex[v].empty()) fail("vertex in no region");
    if (!div.is_boundary[v] && div.regions_of_vertex[v].size() != 1)
      fail("interior vertex in several regions");
  }
  return a;
}

RegionHost build_region_host(const Region& region, i32 hole_idx,
                             u64 pert_id_base, const Perturbation& pert) {
  RegionHost host;
  host.g = region.g;  // copy, then add fillers
  host.g.allow_multi = true;
  u64 idx = 0;
  for (i32 h = 0; h < (i32)region.holes.size(); h++) {
    if (h == hole_idx) continue;
    const Hole& H = region.holes[h];
    i32 f = host.g.add_vertex();
    host.fillers.push_back(f);
    i32 L = (i32)H.verts.size();
    std::vector<i32> spokes(L);
    for (i32 i = 0; i < L; i++) {
      spokes[i] = host.g.add_edge(H.verts[i], f, {0, true}, {0, true});
      host.g.edges[spokes[i]].pert = pert.word(pert_id_base + idx++);
    }
    // Filler rotation = reversed walk order; spoke at each hole vertex goes
    // into that visit's corner (right after the arriving dart's twin).
    for (i32 i = L - 1; i >= 0; i--) host.g.rot[f].push_back(2 * spokes[i] + 1);
    for (i32 i = 0; i < L; i++) {
      i32 dep = H.darts[i];
      insert_before(host.g.rot[H.verts[i]], dep, 2 * spokes[i]);
    }
  }
  host.g.finalize();
  const Hole& H = region.holes[hole_idx];
  host.hole_verts = H.verts;
  host.hole_darts = H.darts;
  host.hole_face = host.g.face_of[H.darts[0]];
  host.hole_pos.assign(host.g.n, -1);
  for (i32 i = 0; i < (i32)H.verts.size(); i++) host.hole_pos[H.verts[i]] = i;
  return host;
}

RegionHost host_from_face(const EmbeddedGraph& g, i32 face) {
  RegionHost host;
  host.g = g;
  host.hole_face = face;
  host.hole_darts = g.face_darts(face);
  host.hole_pos.assign(g.n, -1);
  for (i32 i = 0; i < (i32)host.hole_darts.size(); i++) {
    i32 v = g.tail(host.hole_darts[i]);
    if (host.hole_pos[v] != -1) throw std::runtime_error("host face not simple");
    host.hole_pos[v] = i;
    host.hole_verts.push_back(v);
  }
  return host;
}

}  // namespace pdo
