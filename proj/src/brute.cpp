#include "pdo/brute.hpp"

#include <queue>
#include <stdexcept>

namespace pdo {

std::vector<i32> brute_voronoi(const RegionHost& host,
                               std::span<const Cost> site_weights) {
  i32 k = host.k();
  if ((i32)site_weights.size() != k)
    throw std::runtime_error("brute voronoi: one weight per site required");
  std::vector<SpResult> trees(k);
  for (i32 i = 0; i < k; i++) trees[i] = sssp(host.g, host.hole_verts[i]);
  std::vector<i32> cell(host.g.n, -1);
  for (i32 v = 0; v < host.g.n; v++) {
    i32 best = -1;
    Cost best_c = Cost::unreachable();
    for (i32 i = 0; i < k; i++) {
      if (trees[i].dist[v].is_unreachable()) continue;
      Cost c = site_weights[i] + trees[i].dist[v];
      if (best == -1 || c < best_c) {
        best = i;
        best_c = c;
      }
    }
    if (best == -1) throw std::runtime_error("brute voronoi: unreachable");
    // Owner = last hole vertex on the winning path.
    i32 x = v;
    while (host.hole_pos[x] == -1) {
      i32 pd = trees[best].parent[x];
      if (pd == -1) throw std::runtime_error("brute voronoi: broken path");
      x = host.g.tail(pd);
    }
    cell[v] = host.hole_pos[x];
  }
  return cell;
}

RegionMembership brute_region_membership(const EmbeddedGraph& g,
                                         i32 outside_face,
                                         std::span<const i32> walk) {
  if (walk.empty()) throw std::runtime_error("region membership: empty walk");
  for (size_t i = 0; i < walk.size(); i++) {
    i32 d = walk[i];
    i32 nd = walk[(i + 1) % walk.size()];
    if (g.head(d) != g.tail(nd))
      throw std::runtime_error("region membership: walk not closed");
  }
  std::vector<char> wall(g.m(), 0);
  for (i32 d : walk) wall[d >> 1] = 1;

  std::vector<char> outside(g.face_count(), 0);
  std::vector<i32> stack = {outside_face};
  outside[outside_face] = 1;
  while (!stack.empty()) {
    i32 f = stack.back();
    stack.pop_back();
    for (i32 d : g.face_darts(f)) {
      if (wall[d >> 1]) continue;
      i32 nf = g.face_of[d ^ 1];
      if (!outside[nf]) {
        outside[nf] = 1;
        stack.push_back(nf);
      }
    }
  }

  RegionMembership rm;
  rm.face_in.assign(g.face_count(), 0);
  for (i32 f = 0; f < g.face_count(); f++) rm.face_in[f] = !outside[f];
  rm.vert_in.assign(g.n, 0);
  for (i32 d : walk) rm.vert_in[g.tail(d)] = 1;
  for (i32 f = 0; f < g.face_count(); f++)
    if (rm.face_in[f])
      for (i32 d : g.face_darts(f)) rm.vert_in[g.tail(d)] = 1;
  return rm;
}

std::vector<Cost> brute_sssp(const EmbeddedGraph& g, i32 src) {
  std::vector<Cost> dist(g.n, Cost::unreachable());
  std::vector<char> done(g.n, 0);
  using Item = std::pair<Cost, i32>;
  auto cmp = [](const Item& a, const Item& b) { return b.first < a.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
  dist[src] = Cost::zero();
  pq.push({dist[src], src});
  while (!pq.empty()) {
    auto [c, v] = pq.top();
    pq.pop();
    if (done[v]) continue;
    done[v] = 1;
    for (i32 d : g.rot[v]) {
      i32 h = g.head(d);
      Cost nc = c + g.cost(d);
      if (!done[h] && nc < dist[h]) {
        dist[h] = nc;
        pq.push({nc, h});
      }
    }
  }
  return dist;
}

i64 brute_distance(const EmbeddedGraph& g, i32 u, i32 v) {
  return brute_sssp(g, u)[v].reported();
}

std::vector<std::vector<i64>> brute_all_pairs(const EmbeddedGraph& g) {
  std::vector<std::vector<i64>> out(g.n);
  for (i32 u = 0; u < g.n; u++) {
    auto dist = brute_sssp(g, u);
    out[u].resize(g.n);
    for (i32 v = 0; v < g.n; v++) out[u][v] = dist[v].reported();
  }
  return out;
}

}  // namespace pdo
