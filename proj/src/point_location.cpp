#include "pdo/point_location.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pdo/shortest_paths.hpp"

namespace pdo {

namespace {

i32 imod(i32 a, i32 k) { return ((a % k) + k) % k; }

bool is_child(const EmbeddedGraph& g, const std::vector<i32>& parent, i32 d) {
  i32 h = g.head(d);
  return parent[h] == (d ^ 1);
}

// Vertices of the tree path from x to the root, inclusive.
std::vector<i32> tree_path_verts(const EmbeddedGraph& g,
                                 const std::vector<i32>& parent, i32 x) {
  std::vector<i32> out = {x};
  while (parent[x] != -1) {
    x = g.head(parent[x]);
    out.push_back(x);
  }
  return out;
}

// Labels unlabeled subtrees hanging off darts strictly between `from` and
// `to` in clockwise rotation order at their shared tail.
void label_subtree(const EmbeddedGraph& g, const std::vector<i32>& parent,
                   i32 d, i32 lab, std::vector<i32>& label) {
  if (!is_child(g, parent, d)) return;
  i32 c = g.head(d);
  if (label[c] != -1) return;
  std::vector<i32> st = {c};
  label[c] = lab;
  while (!st.empty()) {
    i32 z = st.back();
    st.pop_back();
    for (i32 dd : g.rot[z]) {
      if (!is_child(g, parent, dd)) continue;
      i32 h = g.head(dd);
      if (label[h] == -1) {
        label[h] = lab;
        st.push_back(h);
      }
    }
  }
}

void side_subtrees(const EmbeddedGraph& g, const std::vector<i32>& parent,
                   i32 from, i32 to, i32 lab, std::vector<i32>& label) {
  if (from == to) return;
  for (i32 d = g.rot_next(from); d != to; d = g.rot_next(d))
    label_subtree(g, parent, d, lab, label);
}

// One directional index sweep over the hole order; fwd_dir false runs on the
// reversed order. Returns per vertex the iteration (0..k) that first covers
// it. The tree hangs from the sweep target via `parent`.
std::vector<i32> wedge_sweep(const RegionHost& host,
                             const std::vector<i32>& parent, bool fwd_dir) {
  const EmbeddedGraph& g = host.g;
  i32 k = host.k();
  auto bvert = [&](i32 i) {
    return host.hole_verts[fwd_dir ? imod(i, k) : imod(-i, k)];
  };
  // Dart from the i-th sweep vertex to the (i-1)-th: one hop against the
  // marching direction along the hole cycle.
  auto new_delim = [&](i32 i) {
    i32 p = fwd_dir ? imod(i, k) : imod(-i, k);
    return fwd_dir ? (host.hole_darts[imod(p - 1, k)] ^ 1) : host.hole_darts[p];
  };
  auto prev_delim = [&](i32 i) {
    i32 p = fwd_dir ? imod(i - 1, k) : imod(-(i - 1), k);
    return fwd_dir ? host.hole_darts[p] : (host.hole_darts[imod(p - 1, k)] ^ 1);
  };

  std::vector<i32> label(g.n, -1);
  std::vector<i32> cur = tree_path_verts(g, parent, bvert(0));
  for (i32 z : cur) label[z] = 0;
  std::vector<i32> pos(g.n, -1);

  for (i32 i = 1; i < k; i++) {
    for (size_t q = 0; q < cur.size(); q++) pos[cur[q]] = (i32)q;
    // Walk the new path until it meets the previous one.
    std::vector<i32> seg;
    i32 x = bvert(i);
    while (pos[x] == -1) {
      seg.push_back(x);
      if (label[x] == -1) label[x] = i;
      if (parent[x] == -1)
        throw std::runtime_error("wedge sweep: disconnected host");
      x = g.head(parent[x]);
    }
    i32 pm = pos[x];
    // Subtrees on the fresh-region side of the new path. The fresh region
    // lies left of the hole walk, hence left of the new path when marching
    // forward and right of it when marching backward.
    for (size_t q = 0; q < seg.size(); q++) {
      i32 z = seg[q];
      i32 dn = parent[z];
      i32 dp = (q == 0) ? new_delim(i) : (parent[seg[q - 1]] ^ 1);
      if (fwd_dir)
        side_subtrees(g, parent, dn, dp, i, label);
      else
        side_subtrees(g, parent, dp, dn, i, label);
    }
    // Subtrees on the fresh-region side of the previous path, up to but
    // excluding the meet vertex.
    for (i32 q = 0; q < pm; q++) {
      i32 z = cur[q];
      i32 dn = parent[z];
      i32 dp = (q == 0) ? prev_delim(i) : (parent[cur[q - 1]] ^ 1);
      if (fwd_dir)
        side_subtrees(g, parent, dp, dn, i, label);
      else
        side_subtrees(g, parent, dn, dp, i, label);
    }
    // Pinch sector at the meet vertex, between the dart down the previous
    // path and the twin of the new path's arrival dart.
    {
      i32 em = seg.empty() ? new_delim(i) : (parent[seg.back()] ^ 1);
      i32 xm = (pm == 0) ? prev_delim(i) : (parent[cur[pm - 1]] ^ 1);
      i32 from = fwd_dir ? xm : em, to = fwd_dir ? em : xm;
      side_subtrees(g, parent, from, to, i, label);
      // If the parent dart at the meet vertex falls inside the pinch sector,
      // the shared path suffix is a spur into the fresh region and everything
      // hanging off it is interior.
      i32 pd = parent[cur[pm]];
      bool spur_in = false;
      if (pd != -1 && from != to)
        for (i32 d = g.rot_next(from); d != to; d = g.rot_next(d))
          if (d == pd) spur_in = true;
      if (spur_in)
        for (size_t q = pm + 1; q < cur.size(); q++) {
          i32 skip = parent[cur[q - 1]] ^ 1;
          for (i32 d : g.rot[cur[q]])
            if (d != skip) label_subtree(g, parent, d, i, label);
        }
    }
    std::vector<i32> next(seg);
    next.insert(next.end(), cur.begin() + pm, cur.end());
    for (i32 z : cur) pos[z] = -1;
    cur = std::move(next);
  }
  for (i32 z = 0; z < g.n; z++)
    if (label[z] == -1) label[z] = k;
  return label;
}

// Face sweep along a run of hole positions pos_of(0..count-1): iteration
// t >= 1 labels the faces enclosed by the paths from positions t-1 and t and
// the hole edge between them. Marching direction follows fwd_dir as above.
std::vector<i32> face_sweep(const RegionHost& host,
                            const std::vector<i32>& parent, i32 start_pos,
                            i32 count, bool fwd_dir) {
  const EmbeddedGraph& g = host.g;
  i32 k = host.k();
  auto pos_of = [&](i32 t) { return imod(start_pos + (fwd_dir ? t : -t), k); };
  auto new_delim = [&](i32 t) {
    i32 p = pos_of(t);
    return fwd_dir ? (host.hole_darts[imod(p - 1, k)] ^ 1) : host.hole_darts[p];
  };
  auto prev_delim = [&](i32 t) {
    i32 p = pos_of(t - 1);
    return fwd_dir ? host.hole_darts[p] : (host.hole_darts[imod(p - 1, k)] ^ 1);
  };

  std::vector<i32> flab(g.face_count(), -1);
  std::vector<char> claimed(g.n, 0);
  auto mark = [&](i32 f, i32 t) {
    if (f != host.hole_face && flab[f] == -1) flab[f] = t;
  };
  // Corners between consecutive darts of the closed clockwise interval X..Y.
  auto corner_pass = [&](i32 X, i32 Y, i32 t) {
    if (X == Y) return;
    for (i32 d = X; d != Y; d = g.rot_next(d)) mark(g.face_of[d ^ 1], t);
  };
  auto claim_subtree = [&](i32 d, i32 t) {
    if (!is_child(g, parent, d)) return;
    i32 c = g.head(d);
    if (claimed[c]) return;
    std::vector<i32> st = {c};
    claimed[c] = 1;
    while (!st.empty()) {
      i32 z = st.back();
      st.pop_back();
      for (i32 dd : g.rot[z]) {
        mark(g.face_of[dd ^ 1], t);
        if (!is_child(g, parent, dd)) continue;
        i32 h = g.head(dd);
        if (!claimed[h]) {
          claimed[h] = 1;
          st.push_back(h);
        }
      }
    }
  };
  auto subtree_pass = [&](i32 from, i32 to, i32 t) {
    if (from == to) return;
    for (i32 d = g.rot_next(from); d != to; d = g.rot_next(d))
      claim_subtree(d, t);
  };

  std::vector<i32> cur =
      tree_path_verts(g, parent, host.hole_verts[pos_of(0)]);
  std::vector<i32> pos(g.n, -1);
  for (i32 t = 1; t < count; t++) {
    for (size_t q = 0; q < cur.size(); q++) pos[cur[q]] = (i32)q;
    std::vector<i32> seg;
    i32 x = host.hole_verts[pos_of(t)];
    while (pos[x] == -1) {
      seg.push_back(x);
      if (parent[x] == -1)
        throw std::runtime_error("face sweep: disconnected host");
      x = g.head(parent[x]);
    }
    i32 pm = pos[x];
    for (size_t q = 0; q < seg.size(); q++) {
      i32 z = seg[q];
      i32 dn = parent[z];
      i32 dp = (q == 0) ? new_delim(t) : (parent[seg[q - 1]] ^ 1);
      (void)z;
      if (fwd_dir) {
        corner_pass(dn, dp, t);
        subtree_pass(dn, dp, t);
      } else {
        corner_pass(dp, dn, t);
        subtree_pass(dp, dn, t);
      }
    }
    for (i32 q = 0; q < pm; q++) {
      i32 z = cur[q];
      i32 dn = parent[z];
      i32 dp = (q == 0) ? prev_delim(t) : (parent[cur[q - 1]] ^ 1);
      (void)z;
      if (fwd_dir) {
        corner_pass(dp, dn, t);
        subtree_pass(dp, dn, t);
      } else {
        corner_pass(dn, dp, t);
        subtree_pass(dn, dp, t);
      }
    }
    {
      i32 em = seg.empty() ? new_delim(t) : (parent[seg.back()] ^ 1);
      i32 xm = (pm == 0) ? prev_delim(t) : (parent[cur[pm - 1]] ^ 1);
      i32 from = fwd_dir ? xm : em, to = fwd_dir ? em : xm;
      corner_pass(from, to, t);
      subtree_pass(from, to, t);
      i32 pd = parent[cur[pm]];
      bool spur_in = false;
      if (pd != -1 && from != to)
        for (i32 d = g.rot_next(from); d != to; d = g.rot_next(d))
          if (d == pd) spur_in = true;
      if (spur_in)
        for (size_t q = pm + 1; q < cur.size(); q++) {
          i32 skip = parent[cur[q - 1]] ^ 1;
          for (i32 d : g.rot[cur[q]]) {
            mark(g.face_of[d ^ 1], t);
            if (d != skip) claim_subtree(d, t);
          }
        }
    }
    std::vector<i32> next(seg);
    next.insert(next.end(), cur.begin() + pm, cur.end());
    for (i32 z : cur) pos[z] = -1;
    cur = std::move(next);
  }
  return flab;
}

}  // namespace

std::vector<i32> tree_path_darts(const EmbeddedGraph& g,
                                 std::span<const i32> parent, i32 x) {
  std::vector<i32> out;
  while (parent[x] != -1) {
    out.push_back(parent[x]);
    x = g.head(parent[x]);
  }
  return out;
}

WedgeIndex build_wedge_index(const RegionHost& host, i32 w) {
  WedgeIndex wi;
  wi.host = &host;
  wi.w = w;
  wi.k = host.k();
  SpResult sp = sssp(host.g, w, true);
  wi.parent = std::move(sp.parent);
  wi.fwd = wedge_sweep(host, wi.parent, true);
  wi.bwd = wedge_sweep(host, wi.parent, false);
  // Preorder intervals over the tree for O(1) ancestor tests.
  const EmbeddedGraph& g = host.g;
  wi.tin.assign(g.n, -1);
  wi.tout.assign(g.n, -1);
  i32 clock = 0;
  std::vector<std::pair<i32, char>> st = {{w, 0}};
  while (!st.empty()) {
    auto [z, phase] = st.back();
    if (phase == 0) {
      st.back().second = 1;
      wi.tin[z] = clock++;
      for (i32 d : g.rot[z])
        if (is_child(g, wi.parent, d)) st.push_back({g.head(d), 0});
    } else {
      wi.tout[z] = clock;
      st.pop_back();
    }
  }
  return wi;
}

bool wedge_query(const WedgeIndex& wi, i32 x, i32 a, i32 b) {
  i32 k = wi.k;
  i32 L = b - a;
  if (L < 0 || L > k) throw std::runtime_error("wedge query: bad arc");
  if (L == k) return true;
  i32 A = imod(a, k);
  i32 B = imod(b, k);
  const auto& bv = wi.host->hole_verts;
  if (L == 0) return wi.on_path(x, bv[A]);
  if (A == 0) return wi.fwd[x] <= B;
  if (B == 0) return wi.bwd[x] <= k - A;
  if (A + L > k) return wi.bwd[x] <= k - A || wi.fwd[x] <= B;
  // The two one-sided wedges overlap in the arc-free wedge plus the whole
  // b_0 path; vertices on that path count only when on a bounding path.
  if (wi.fwd[x] == 0) return wi.on_path(x, bv[A]) || wi.on_path(x, bv[B]);
  return wi.fwd[x] <= B && wi.bwd[x] <= k - A;
}

std::vector<char> region_faces(const RegionHost& host,
                               std::span<const i32> walk) {
  const EmbeddedGraph& g = host.g;
  if (walk.empty()) throw std::runtime_error("region faces: empty walk");
  for (size_t i = 0; i < walk.size(); i++)
    if (g.head(walk[i]) != g.tail(walk[(i + 1) % walk.size()]))
      throw std::runtime_error("region faces: walk not closed");
  std::vector<char> wall(g.m(), 0);
  for (i32 d : walk) wall[d >> 1] = 1;
  std::vector<char> out(g.face_count(), 0);
  out[host.hole_face] = 1;
  std::vector<i32> st = {host.hole_face};
  while (!st.empty()) {
    i32 f = st.back();
    st.pop_back();
    for (i32 d : g.face_darts(f)) {
      if (wall[d >> 1]) continue;
      i32 nf = g.face_of[d ^ 1];
      if (!out[nf]) {
        out[nf] = 1;
        st.push_back(nf);
      }
    }
  }
  std::vector<char> in(g.face_count(), 0);
  for (i32 f = 0; f < g.face_count(); f++) in[f] = !out[f];
  return in;
}

i32 compute_buv(const WedgeIndex& wi, i32 uv_edge) {
  const RegionHost& host = *wi.host;
  const EmbeddedGraph& g = host.g;
  i32 k = host.k();
  // One face sweep around the full hole labels every non-hole face with
  // 1 + its basic wedge index.
  std::vector<i32> flab = face_sweep(host, wi.parent, 0, k + 1, true);
  // child endpoint when the edge is a tree edge toward u
  i32 child = -1;
  for (i32 d : {2 * uv_edge, 2 * uv_edge + 1})
    if (wi.parent[g.tail(d)] == d) child = g.tail(d);
  auto on_path = [&](i32 pos) {
    return child != -1 && wi.on_path(child, host.hole_verts[imod(pos, k)]);
  };
  i32 f1 = g.face_of[2 * uv_edge], f2 = g.face_of[2 * uv_edge + 1];
  i32 hit = -1;
  for (i32 i = 0; i < k; i++) {
    if (on_path(i + 1)) continue;
    bool inside = flab[f1] == i + 1 || flab[f2] == i + 1 || on_path(i) ||
                  (host.hole_darts[i] >> 1) == uv_edge;
    if (!inside) continue;
    if (hit != -1)
      throw std::runtime_error("buv: edge in two basic wedges");
    hit = i;
  }
  return hit;
}

bool paths_cross(const EmbeddedGraph& g, std::span<const i32> a,
                 std::span<const i32> b) {
  if (a.empty() || b.empty()) return false;
  // Per vertex of a: position, outgoing dart, dart back to the predecessor.
  std::vector<i32> averts = {g.tail(a[0])};
  for (i32 d : a) averts.push_back(g.head(d));
  std::vector<i32> apos(g.n, -1);
  for (size_t i = 0; i < averts.size(); i++) {
    if (apos[averts[i]] != -1)
      throw std::runtime_error("paths cross: first path not simple");
    apos[averts[i]] = (i32)i;
  }
  std::vector<char> aedge(g.m(), 0);
  for (i32 d : a) aedge[d >> 1] = 1;
  i32 alen = (i32)a.size();
  // Side of a non-path dart d at an interior path vertex: 1 when d lies
  // clockwise strictly between the outgoing and the backward path darts,
  // else 2. 0 marks the path ends where no side is defined.
  auto side_of = [&](i32 d) -> i32 {
    i32 p = apos[g.tail(d)];
    if (p == 0 || p == alen) return 0;
    i32 X = a[p];
    i32 Y = a[p - 1] ^ 1;
    for (i32 e = g.rot_next(X); e != Y; e = g.rot_next(e))
      if (e == d) return 1;
    return 2;
  };

  i32 nb = (i32)b.size();
  std::vector<i32> bverts = {g.tail(b[0])};
  for (i32 d : b) bverts.push_back(g.head(d));
  i32 i = 0;
  while (i <= nb) {
    if (apos[bverts[i]] == -1) {
      i++;
      continue;
    }
    // Contact run starting at bverts[i].
    i32 entry = (i == 0) ? 0 : side_of(b[i - 1] ^ 1);
    bool has_end = false;
    i32 jx = i;
    while (true) {
      i32 p = apos[bverts[jx]];
      if (p == 0 || p == alen) has_end = true;
      if (jx == nb) break;
      if (!aedge[b[jx] >> 1]) break;
      jx++;
      if (apos[bverts[jx]] == -1)
        throw std::runtime_error("paths cross: shared edge leaves path");
    }
    i32 exit = (jx == nb) ? 0 : side_of(b[jx]);
    if (!has_end && entry != 0 && exit != 0 && entry != exit) return true;
    i = jx + 1;
  }
  return false;
}

namespace {

// Closed boundary walk of box(i, i+1): up to u, across the edge, down from v
// and back along the hole edge.
std::vector<i32> box_walk(const RegionHost& host, const WedgeIndex& du,
                          const WedgeIndex& dv, i32 uv_dart, i32 i) {
  const EmbeddedGraph& g = host.g;
  i32 k = host.k();
  std::vector<i32> walk =
      tree_path_darts(g, du.parent, host.hole_verts[imod(i, k)]);
  walk.push_back(uv_dart);
  std::vector<i32> pv =
      tree_path_darts(g, dv.parent, host.hole_verts[imod(i + 1, k)]);
  for (auto it = pv.rbegin(); it != pv.rend(); ++it) walk.push_back(*it ^ 1);
  walk.push_back(host.hole_darts[imod(i, k)] ^ 1);
  return walk;
}

StripIndex build_strip(const RegionHost& host, const WedgeIndex& du,
                       const WedgeIndex& dv, i32 uv_dart, i32 i1, i32 i2) {
  const EmbeddedGraph& g = host.g;
  i32 k = host.k();
  StripIndex s;
  s.i1 = i1;
  s.i2 = i2;
  auto defined = [&](i32 i) {
    std::vector<i32> A =
        tree_path_darts(g, du.parent, host.hole_verts[imod(i, k)]);
    std::vector<i32> B =
        tree_path_darts(g, dv.parent, host.hole_verts[imod(i + 1, k)]);
    return !paths_cross(g, A, B);
  };
  if (!defined(i2 - 1)) {
    s.j = i2;
  } else {
    i32 lo = i1, hi = i2 - 1;
    while (lo < hi) {
      i32 mid = lo + (hi - lo) / 2;
      if (defined(mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    s.j = lo;
  }
  s.jf.assign(g.face_count(), -1);
  s.jpf.assign(g.face_count(), -1);
  if (s.j <= i2 - 2) {
    // Exit indices: sweep u's tree backward from b_{i2-1} to b_j.
    std::vector<i32> lab =
        face_sweep(host, du.parent, imod(i2 - 1, k), i2 - s.j, false);
    for (i32 f = 0; f < g.face_count(); f++)
      if (lab[f] != -1) s.jf[f] = (i2 - 1) - lab[f];
    // Entry indices: sweep v's tree forward from b_{j+1} to b_{i2}.
    lab = face_sweep(host, dv.parent, imod(s.j + 1, k), i2 - s.j, true);
    for (i32 f = 0; f < g.face_count(); f++)
      if (lab[f] != -1) s.jpf[f] = s.j + lab[f] - 1;
  }
  if (s.j < i2) {
    s.f_lo = region_faces(host, box_walk(host, du, dv, uv_dart, s.j));
    s.f_hi = region_faces(host, box_walk(host, du, dv, uv_dart, i2 - 1));
  } else {
    s.f_lo.assign(g.face_count(), 0);
    s.f_hi.assign(g.face_count(), 0);
  }
  return s;
}

}  // namespace

EdgeLocator build_edge_locator(const RegionHost& host, i32 u, i32 v) {
  const EmbeddedGraph& g = host.g;
  if (u == v) throw std::runtime_error("edge locator: u == v");
  EdgeLocator loc;
  loc.host = &host;
  loc.u = u;
  loc.v = v;
  for (i32 d : g.rot[u])
    if (g.head(d) == v) {
      loc.uv_dart = d;
      break;
    }
  if (loc.uv_dart == -1)
    throw std::runtime_error("edge locator: vertices not adjacent");
  loc.du = build_wedge_index(host, u);
  loc.dv = build_wedge_index(host, v);
  loc.du.host = &host;
  loc.dv.host = &host;
  i32 e = loc.uv_dart >> 1;
  loc.buv = compute_buv(loc.du, e);
  loc.bvu = compute_buv(loc.dv, e);
  // Strip paths must avoid buv among their inner vertices and bvu among
  // their interior vertices; break the hole cycle accordingly. The hole edge
  // at position buv can never sit inside a strip, so its box faces are
  // stored explicitly.
  i32 k = host.k();
  std::vector<std::pair<i32, i32>> fam;
  if (loc.buv == -1 && loc.bvu == -1) {
    fam = {{0, k}};
  } else if (loc.buv == -1) {
    fam = {{loc.bvu, loc.bvu + k}};
  } else {
    loc.has_fuv = true;
    i32 a = imod(loc.buv + 1, k);
    i32 l1 = (loc.bvu == -1) ? k - 1 : imod(loc.bvu - loc.buv - 1, k);
    if (l1 > 0) fam.push_back({a, a + l1});
    if (l1 < k - 1) fam.push_back({a + l1, a + k - 1});
  }
  for (auto [i1, i2] : fam)
    loc.strips.push_back(build_strip(host, loc.du, loc.dv, loc.uv_dart, i1, i2));
  if (loc.has_fuv) {
    std::vector<i32> A =
        tree_path_darts(g, loc.du.parent, host.hole_verts[loc.buv]);
    std::vector<i32> B = tree_path_darts(
        g, loc.dv.parent, host.hole_verts[imod(loc.buv + 1, k)]);
    if (paths_cross(g, A, B))
      loc.f_uv.assign(g.face_count(), 0);
    else
      loc.f_uv =
          region_faces(host, box_walk(host, loc.du, loc.dv, loc.uv_dart, loc.buv));
  }
  loc.face_pick.assign(g.n, -1);
  for (i32 z = 0; z < g.n; z++)
    for (i32 d : g.rot[z])
      if (g.face_of[d] != host.hole_face) {
        loc.face_pick[z] = g.face_of[d];
        break;
      }
  return loc;
}

bool box_query(const EdgeLocator& loc, i32 w, i32 a, i32 b) {
  const RegionHost& host = *loc.host;
  i32 k = host.k();
  loc.accesses = 0;
  auto acc = [&](i32 c) { loc.accesses += c; };
  i32 L = imod(b - a, k);
  if (L == 0) throw std::runtime_error("box query: endpoints equal");
  a = imod(a, k);
  // Split position: buv when it lies inside the arc, else the last edge.
  acc(1);
  i32 t_off = L - 1;
  if (loc.buv != -1 && imod(loc.buv - a, k) < L) t_off = imod(loc.buv - a, k);
  acc(3);
  if (wedge_query(loc.du, w, a, a + t_off)) return true;
  acc(3);
  if (wedge_query(loc.dv, w, a + t_off + 1, a + L)) return true;
  acc(1);
  i32 f = loc.face_pick[w];
  i32 tpos = imod(a + t_off, k);
  if (loc.has_fuv && tpos == loc.buv) {
    acc(1);
    return (bool)loc.f_uv[f];
  }
  for (const StripIndex& s : loc.strips) {
    i32 off = imod(tpos - s.i1, k);
    if (off >= s.i2 - s.i1) continue;
    i32 ip = s.i1 + off;
    acc(2);
    i32 jf = s.jf[f], jpf = s.jpf[f];
    if (jf != -1 && jpf != -1 && jpf < ip && ip <= jf) return true;
    acc(1);
    if (s.f_hi[f] && jpf != -1 && ip > jpf) return true;
    acc(1);
    bool flo = s.f_lo[f];
    if (flo && jf != -1 && ip <= jf) return true;
    if (flo && jf == -1) return true;
    return false;
  }
  throw std::runtime_error("box query: no covering strip");
}

}  // namespace pdo
