#include "pdo/voronoi.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdo {

namespace {

// Cell bounded by the multigraph face traced through vor dart d: the tail
// side of forward-crossed darts.
i32 side_cell(const VorMultigraph& vor, i32 d) {
  const VorEdge& e = vor.edges[d >> 1];
  return (d & 1) ? e.cell_right : e.cell_left;
}

}  // namespace

VoronoiDiagram compute_cells(const RegionHost& host,
                             std::span<const Cost> site_weights) {
  if ((i32)site_weights.size() != host.k())
    throw std::runtime_error("voronoi: one weight per hole vertex required");
  std::vector<std::pair<i32, Cost>> sites(host.k());
  for (i32 i = 0; i < host.k(); i++)
    sites[i] = {host.hole_verts[i], site_weights[i]};
  SpResult r = multi_source(host.g, sites);
  VoronoiDiagram vd;
  vd.host = &host;
  vd.weights.assign(site_weights.begin(), site_weights.end());
  vd.dist = std::move(r.dist);
  vd.parent = std::move(r.parent);
  vd.tie = r.tie;
  vd.cell_of.assign(host.g.n, -1);
  for (i32 v = 0; v < host.g.n; v++) {
    if (r.site[v] < 0 || vd.dist[v].is_unreachable())
      throw std::runtime_error("voronoi: unreachable vertex");
    vd.cell_of[v] = host.hole_pos[r.site[v]];
  }
  return vd;
}

VorMultigraph build_vor(const VoronoiDiagram& vd) {
  const RegionHost& host = *vd.host;
  const EmbeddedGraph& g = host.g;
  VorMultigraph vor;
  i32 F = g.face_count();
  // Boundary darts per face, in face walk order.
  std::vector<std::vector<i32>> bdarts(F);
  for (i32 f = 0; f < F; f++) {
    i32 d = g.faces[f].first_dart;
    for (i32 i = 0; i < g.faces[f].len; i++, d = g.face_next(d))
      if (vd.cell_of[g.tail(d)] != vd.cell_of[g.head(d)]) bdarts[f].push_back(d);
  }
  vor.vert_of_face.assign(F, -1);
  auto add_vert = [&](i32 f) {
    vor.vert_of_face[f] = vor.nv();
    vor.face_of_vert.push_back(f);
  };
  add_vert(host.hole_face);
  for (i32 f = 0; f < F; f++)
    if (f != host.hole_face && (i32)bdarts[f].size() >= 3) add_vert(f);

  // Contract: walk from each unclaimed boundary dart of a vor vertex
  // through degree-2 faces until the next vor vertex.
  std::vector<i32> start_dart(g.dart_count(), -1);
  std::vector<char> used(g.dart_count(), 0);
  for (i32 xv = 0; xv < vor.nv(); xv++) {
    for (i32 d0 : bdarts[vor.face_of_vert[xv]]) {
      if (used[d0]) continue;
      VorEdge e;
      e.x = xv;
      e.cell_left = vd.cell_of[g.tail(d0)];
      e.cell_right = vd.cell_of[g.head(d0)];
      i32 d = d0;
      while (true) {
        e.darts.push_back(d);
        used[d] = used[EmbeddedGraph::twin(d)] = 1;
        i32 f = g.face_of[EmbeddedGraph::twin(d)];
        if (vor.vert_of_face[f] != -1) {
          e.y = vor.vert_of_face[f];
          break;
        }
        if (bdarts[f].size() != 2)
          throw std::runtime_error("vor: interior face off the boundary path");
        i32 t = EmbeddedGraph::twin(d);
        d = bdarts[f][bdarts[f][0] == t ? 1 : 0];
      }
      i32 id = vor.ne();
      start_dart[d0] = 2 * id;
      start_dart[EmbeddedGraph::twin(e.darts.back())] = 2 * id + 1;
      vor.edges.push_back(std::move(e));
    }
  }

  vor.rot.resize(vor.nv());
  for (i32 v = 0; v < vor.nv(); v++)
    for (i32 d : bdarts[vor.face_of_vert[v]]) {
      if (start_dart[d] == -1) throw std::runtime_error("vor: unclaimed dart");
      vor.rot[v].push_back(start_dart[d]);
    }
  vor.pos_in_rot.assign(2 * vor.ne(), -1);
  for (i32 v = 0; v < vor.nv(); v++)
    for (i32 p = 0; p < (i32)vor.rot[v].size(); p++)
      vor.pos_in_rot[vor.rot[v][p]] = p;

  // Face orbits of the multigraph are the cell boundary cycles.
  vor.cycle_of.assign(2 * vor.ne(), -1);
  for (i32 d0 = 0; d0 < 2 * vor.ne(); d0++) {
    if (vor.cycle_of[d0] != -1) continue;
    i32 cy = (i32)vor.cycles.size();
    vor.cycles.emplace_back();
    i32 d = d0;
    do {
      vor.cycle_of[d] = cy;
      vor.cycles[cy].push_back(d);
      d = vor.face_next(d);
    } while (d != d0);
    vor.cycle_cell.push_back(side_cell(vor, d0));
  }
  vor.cell_cycle.assign(vd.k(), -1);
  for (i32 cy = 0; cy < (i32)vor.cycles.size(); cy++)
    if (vor.cell_cycle[vor.cycle_cell[cy]] == -1)
      vor.cell_cycle[vor.cycle_cell[cy]] = cy;
  return vor;
}

namespace {

// Vertex of cell c on the host face behind vor vertex wv. With a unique
// corner in c that corner wins; with two, the first clockwise from the
// corner outside c.
i32 landing_vertex(const VorMultigraph& vor, const VoronoiDiagram& vd, i32 wv,
                   i32 c) {
  const EmbeddedGraph& g = vd.host->g;
  i32 f = vor.face_of_vert[wv];
  std::vector<i32> corners;
  i32 d = g.faces[f].first_dart;
  for (i32 i = 0; i < g.faces[f].len; i++, d = g.face_next(d))
    corners.push_back(g.tail(d));
  i32 l = (i32)corners.size();
  std::vector<i32> in;
  for (i32 i = 0; i < l; i++)
    if (vd.cell_of[corners[i]] == c) in.push_back(i);
  if (in.size() == 1) return corners[in[0]];
  if (in.size() == 2 && l == 3) {
    i32 out = 3 - in[0] - in[1];
    return corners[(out + 1) % 3];
  }
  throw std::runtime_error("trivor: no landing vertex");
}

}  // namespace

TriVor build_trivor(const VorMultigraph& vor, const VoronoiDiagram& vd) {
  if (vd.k() < 3) throw std::runtime_error("trivor: needs three sites");
  TriVor tv;
  tv.nv = vor.nv();
  tv.vert_face = vor.face_of_vert;
  tv.rot.resize(tv.nv);
  std::vector<i32> keep(2 * vor.ne(), -1);  // vor dart -> tv dart
  for (i32 i = 0; i < vor.ne(); i++) {
    const VorEdge& e = vor.edges[i];
    if (e.x == 0 && e.y == 0) continue;  // cell boundary without a vor vertex
    i32 id = tv.ne();
    tv.edges.push_back({e.x, e.y, -1, -1, i});
    keep[2 * i] = 2 * id;
    keep[2 * i + 1] = 2 * id + 1;
  }

  // One star edge per cell and boundary vertex, listed in cycle order
  // starting after the v_inf visit.
  std::vector<std::vector<std::pair<i32, i32>>> fan(vd.k());  // (vertex, edge)
  for (i32 c = 0; c < vd.k(); c++) {
    i32 cy = vor.cell_cycle[c];
    if (cy < 0) throw std::runtime_error("trivor: cell without boundary");
    const auto& orbit = vor.cycles[cy];
    i32 s = -1;
    for (i32 j = 0; j < (i32)orbit.size(); j++)
      if (vor.tail(orbit[j]) == 0) {
        if (s != -1) throw std::runtime_error("trivor: cycle revisits v_inf");
        s = j;
      }
    if (s < 0) throw std::runtime_error("trivor: cycle misses v_inf");
    for (i32 j = 1; j < (i32)orbit.size(); j++) {
      i32 wv = vor.tail(orbit[(s + j) % orbit.size()]);
      bool dup = false;
      for (auto& [w2, id2] : fan[c]) dup |= w2 == wv;
      if (dup) continue;
      fan[c].push_back({wv, tv.ne()});
      tv.edges.push_back({0, wv, c, landing_vertex(vor, vd, wv, c), -1});
    }
    if (fan[c].empty()) throw std::runtime_error("trivor: empty cell fan");
  }

  // The corner after position p at a vertex lies in the cycle of the next
  // rotation dart; star edges fill their corners.
  auto corner_cell = [&](i32 v, i32 p) {
    i32 dn = vor.rot[v][(p + 1) % vor.degree(v)];
    return vor.cycle_cell[vor.cycle_of[dn]];
  };
  for (i32 v = 1; v < tv.nv; v++) {
    for (i32 p = 0; p < vor.degree(v); p++) {
      i32 d = vor.rot[v][p];
      if (keep[d] != -1) tv.rot[v].push_back(keep[d]);
      i32 c = corner_cell(v, p);
      for (auto& [wv, id] : fan[c])
        if (wv == v) tv.rot[v].push_back(2 * id + 1);
    }
  }
  // A v_inf vor edge rides along the next cell's first chord: same vor
  // vertex, same landing, so the face between them is an empty lens and
  // the face before it closes off the previous cell.
  for (i32 p = 0; p < vor.degree(0); p++) {
    i32 d = vor.rot[0][p];
    i32 c = corner_cell(0, p);
    if (keep[d] != -1) {
      TriVorEdge& e = tv.edges[keep[d] >> 1];
      e.cell = c;
      e.land = landing_vertex(vor, vd, e.y, c);
      tv.rot[0].push_back(keep[d]);
    }
    for (auto it = fan[c].rbegin(); it != fan[c].rend(); ++it)
      tv.rot[0].push_back(2 * it->second);
  }
  i32 total = 0;
  for (auto& r : tv.rot) total += (i32)r.size();
  if (total != 2 * tv.ne()) throw std::runtime_error("trivor: rotation mismatch");

  tv.pos_in_rot.assign(2 * tv.ne(), -1);
  for (i32 v = 0; v < tv.nv; v++)
    for (i32 p = 0; p < (i32)tv.rot[v].size(); p++)
      tv.pos_in_rot[tv.rot[v][p]] = p;
  tv.face_of.assign(2 * tv.ne(), -1);
  for (i32 d0 = 0; d0 < 2 * tv.ne(); d0++) {
    if (tv.face_of[d0] != -1) continue;
    i32 f = tv.face_count++;
    i32 cell = -1;
    i32 d = d0;
    do {
      tv.face_of[d] = f;
      // kept vor edges hug a neighbour cell; fan chords name the owner
      const TriVorEdge& e = tv.edges[d >> 1];
      if (e.star() && (cell == -1 || e.vor == -1)) cell = e.cell;
      d = tv.face_next(d);
    } while (d != d0);
    tv.face_cell.push_back(cell);
  }
  return tv;
}

VoronoiAudit audit_voronoi(const VoronoiDiagram& vd) {
  VoronoiAudit a;
  auto bad = [&](std::string s) {
    a.ok = false;
    a.problems.push_back(std::move(s));
  };
  const RegionHost& host = *vd.host;
  i32 k = vd.k();
  for (i32 v = 0; v < host.g.n; v++)
    if (vd.cell_of[v] < 0 || vd.cell_of[v] >= k) bad("vertex without cell");
  for (i32 i = 0; i < k; i++)
    if (vd.cell_of[host.hole_verts[i]] != i) bad("site not in its own cell");
  // Connectivity: one sweep per cell from its site.
  std::vector<char> seen(host.g.n, 0);
  std::vector<i32> stack;
  for (i32 c = 0; c < k; c++) {
    stack.assign(1, host.hole_verts[c]);
    seen[stack[0]] = 1;
    while (!stack.empty()) {
      i32 v = stack.back();
      stack.pop_back();
      for (i32 d : host.g.rot[v]) {
        i32 u = host.g.head(d);
        if (!seen[u] && vd.cell_of[u] == c) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  for (i32 v = 0; v < host.g.n; v++)
    if (!seen[v]) bad("cell disconnected at vertex " + std::to_string(v));
  return a;
}

VoronoiAudit audit_vor(const VorMultigraph& vor, const VoronoiDiagram& vd) {
  VoronoiAudit a;
  auto bad = [&](std::string s) {
    a.ok = false;
    a.problems.push_back(std::move(s));
  };
  const RegionHost& host = *vd.host;
  const EmbeddedGraph& g = host.g;
  i32 k = vd.k();
  if (vor.ne() > 3 * k) bad("too many vor edges");
  bool tri = true;
  for (i32 f = 0; f < g.face_count(); f++)
    if (f != host.hole_face && g.faces[f].len != 3) tri = false;
  if (tri)
    for (i32 v = 1; v < vor.nv(); v++)
      if (vor.degree(v) != 3) bad("vor vertex degree not 3");
  for (const VorEdge& e : vor.edges)
    for (i32 d : e.darts) {
      i32 ct = vd.cell_of[g.tail(d)], ch = vd.cell_of[g.head(d)];
      if (std::minmax(ct, ch) != std::minmax(e.cell_left, e.cell_right))
        bad("vor edge changes sides");
    }
  if (vor.ne() > 0 && (i32)vor.cycles.size() != k) bad("cycle count != cells");
  std::vector<i32> uses(k, 0);
  for (i32 cy = 0; cy < (i32)vor.cycles.size(); cy++) {
    uses[vor.cycle_cell[cy]]++;
    i32 vinf_visits = 0;
    for (i32 d : vor.cycles[cy]) {
      if (vor.tail(d) == 0) vinf_visits++;
      if (side_cell(vor, d) != vor.cycle_cell[cy]) bad("cycle changes cell");
    }
    if (vor.ne() > 0 && vinf_visits != 1) bad("cycle v_inf visits != 1");
  }
  for (i32 c = 0; c < k; c++)
    if (vor.ne() > 0 && uses[c] != 1) bad("cell / cycle not one to one");
  // Corner cells around v_inf follow the hole order of sites.
  i32 deg = vor.ne() > 0 ? vor.degree(0) : 0;
  if (deg > 0) {
    if (deg != k) bad("v_inf degree != cell count");
    std::vector<i32> seq(deg);
    for (i32 p = 0; p < deg; p++) {
      i32 dn = vor.rot[0][(p + 1) % deg];
      seq[p] = vor.cycle_cell[vor.cycle_of[dn]];
    }
    for (i32 p = 0; p + 1 < deg && deg == k; p++)
      if ((seq[p] + 1) % k != seq[p + 1]) {
        bad("cells around v_inf off hole order");
        break;
      }
  }
  return a;
}

VoronoiAudit audit_trivor(const TriVor& tv, const VorMultigraph& vor,
                          const VoronoiDiagram& vd) {
  VoronoiAudit a;
  auto bad = [&](std::string s) {
    a.ok = false;
    a.problems.push_back(std::move(s));
  };
  if (tv.nv - tv.ne() + tv.face_count != 2) bad("euler count off");
  std::vector<i32> vinf_on_face(tv.face_count, 0);
  std::vector<std::vector<i32>> cells_on_face(tv.face_count);
  std::vector<i32> len(tv.face_count, 0);
  std::vector<i32> star_end(tv.face_count, -2);
  for (i32 d = 0; d < 2 * tv.ne(); d++) {
    i32 f = tv.face_of[d];
    len[f]++;
    if (tv.tail(d) == 0) vinf_on_face[f]++;
    const TriVorEdge& e = tv.edges[d >> 1];
    if (!e.star()) continue;
    auto& cs = cells_on_face[f];
    if (std::find(cs.begin(), cs.end(), e.cell) == cs.end()) cs.push_back(e.cell);
    star_end[f] = star_end[f] == -2 || star_end[f] == e.y ? e.y : -1;
  }
  for (i32 f = 0; f < tv.face_count; f++) {
    if (vinf_on_face[f] != 1) bad("face v_inf visits != 1");
    auto& cs = cells_on_face[f];
    if (cs.empty()) bad("face without star edges");
    // One cell per face, except the digon left where a vor edge to v_inf
    // was removed: two star edges of adjacent cells to the shared vertex.
    if (cs.size() == 2 && !(len[f] == 2 && star_end[f] >= 0))
      bad("two-cell face not a removal digon");
    if (cs.size() > 2) bad("face spans three cells");
    if (!cs.empty() &&
        std::find(cs.begin(), cs.end(), tv.face_cell[f]) == cs.end())
      bad("face cell label off");
  }
  for (i32 v = 1; v < tv.nv; v++) {
    i32 stars = 0;
    i32 deg = tv.degree(v);
    for (i32 p = 0; p < deg; p++) {
      i32 d = tv.rot[v][p];
      if (tv.edges[d >> 1].star()) {
        stars++;
        continue;
      }
      i32 prev = tv.rot[v][(p + deg - 1) % deg];
      i32 next = tv.rot[v][(p + 1) % deg];
      if (!tv.edges[prev >> 1].star() || !tv.edges[next >> 1].star())
        bad("kept edge without star neighbors");
    }
    if (stars < 2) bad("vertex with under two star edges");
  }
  for (const TriVorEdge& e : tv.edges) {
    if (!e.star()) continue;
    if (vd.cell_of[e.land] != e.cell) bad("landing vertex outside its cell");
    const EmbeddedGraph& g = vd.host->g;
    i32 f = vor.face_of_vert[e.y];
    bool on = false;
    i32 d = g.faces[f].first_dart;
    for (i32 i = 0; i < g.faces[f].len; i++, d = g.face_next(d))
      on |= g.tail(d) == e.land;
    if (!on) bad("landing vertex off the vor face");
  }
  return a;
}

}  // namespace pdo
