#include "pdo/shortest_paths.hpp"

#include <algorithm>
#include <queue>

namespace pdo {

namespace {

struct HeapEntry {
  Cost c;
  i32 v;
  bool operator>(const HeapEntry& o) const { return o.c < c; }
};

// Relax all out-darts of v (or in-darts when reverse). Returns tie flag.
template <class Push>
bool relax_from(const EmbeddedGraph& g, std::vector<Cost>& dist,
                std::vector<i32>& parent, const std::vector<char>& settled,
                i32 v, bool reverse, Push&& push) {
  bool tie = false;
  for (i32 d : g.rot[v]) {
    i32 u = g.head(d);
    i32 cd = reverse ? EmbeddedGraph::twin(d) : d;
    Cost w = g.cost(cd);
    if (w.is_unreachable()) continue;
    Cost cand = dist[v] + w;
    if (cand == dist[u]) tie = true;
    if (cand < dist[u]) {
      dist[u] = cand;
      parent[u] = cd;
      if (!settled[u]) push(u, cand);
    }
  }
  return tie;
}

SpResult run_heap(const EmbeddedGraph& g,
                  std::span<const std::pair<i32, Cost>> sources, bool reverse,
                  bool audit) {
  SpResult r;
  r.dist.assign(g.n, Cost::unreachable());
  r.parent.assign(g.n, -1);
  std::vector<char> settled(g.n, 0);
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> pq;
  for (auto& [s, c] : sources) {
    if (c == r.dist[s] && !r.dist[s].is_unreachable()) r.tie = true;
    if (c < r.dist[s]) {
      r.dist[s] = c;
      pq.push({c, s});
    }
  }
  while (!pq.empty()) {
    auto [c, v] = pq.top();
    pq.pop();
    if (settled[v]) continue;
    if (r.dist[v] < c) continue;
    settled[v] = 1;
    r.order.push_back(v);
    bool t = relax_from(g, r.dist, r.parent, settled, v, reverse,
                        [&](i32 u, const Cost& cu) { pq.push({cu, u}); });
    if (t) r.tie = true;
  }
  if (!audit) r.tie = false;
  return r;
}

// Bucket-ring engine for a single finite-weight source; settles in full key
// order (per-bucket min-heap on the perturbed key).
SpResult run_dial(const EmbeddedGraph& g, i32 src, bool reverse, bool audit,
                  i64 max_w) {
  SpResult r;
  r.dist.assign(g.n, Cost::unreachable());
  r.parent.assign(g.n, -1);
  std::vector<char> settled(g.n, 0);
  i64 ring = max_w + 1;
  std::vector<std::vector<i32>> bucket(ring);
  i64 pending = 1;
  r.dist[src] = Cost::zero();
  bucket[0].push_back(src);
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> cur;
  i64 base = 0;
  while (pending > 0) {
    auto& b = bucket[base % ring];
    for (i32 v : b)
      if (!settled[v] && r.dist[v].base == base) cur.push({r.dist[v], v});
    pending -= (i64)b.size();
    b.clear();
    while (!cur.empty()) {
      auto [c, v] = cur.top();
      cur.pop();
      if (settled[v] || r.dist[v] < c) continue;
      settled[v] = 1;
      r.order.push_back(v);
      bool t = relax_from(g, r.dist, r.parent, settled, v, reverse,
                          [&](i32 u, const Cost& cu) {
                            if (cu.base == base) {
                              cur.push({cu, u});
                            } else {
                              bucket[cu.base % ring].push_back(u);
                              pending++;
                            }
                          });
      if (t) r.tie = true;
    }
    base++;
  }
  if (!audit) r.tie = false;
  return r;
}

}  // namespace

SpResult sssp(const EmbeddedGraph& g, i32 src, bool reverse, bool audit) {
  i64 max_w = 0;
  bool finite = true;
  for (const EdgeRec& e : g.edges) {
    if (e.wab.infinite || e.wba.infinite) {
      finite = false;
      break;
    }
    max_w = std::max({max_w, e.wab.base, e.wba.base});
  }
  if (finite && g.n > 4096 && max_w >= 1 && max_w <= (1 << 16))
    return run_dial(g, src, reverse, audit, max_w);
  std::pair<i32, Cost> s{src, Cost::zero()};
  return run_heap(g, std::span(&s, 1), reverse, audit);
}

SpResult multi_source(const EmbeddedGraph& g,
                      std::span<const std::pair<i32, Cost>> sites, bool audit) {
  SpResult r = run_heap(g, sites, false, audit);
  r.site.assign(g.n, -1);
  std::vector<char> is_site(g.n, 0);
  for (auto& [s, c] : sites) is_site[s] = 1;
  for (i32 v : r.order) {
    if (is_site[v]) {
      r.site[v] = v;
    } else if (r.parent[v] != -1) {
      r.site[v] = r.site[g.tail(r.parent[v])];
    }
  }
  return r;
}

}  // namespace pdo
