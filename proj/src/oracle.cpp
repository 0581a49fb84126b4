#include "pdo/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <thread>

#include "pdo/brute.hpp"
#include "pdo/shortest_paths.hpp"
#include "pdo/voronoi.hpp"

namespace pdo {

namespace {

i32 imod(i32 a, i32 k) { return ((a % k) + k) % k; }

i32 resolve_threads(i32 opt_threads) {
  if (opt_threads > 0) return opt_threads;
  if (const char* env = std::getenv("ORACLE_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

i64 tree_words(const DecompTree& t) {
  i64 w = 2;
  w += (i64)t.nodes.size() * 12;
  for (const DecompLeaf& lf : t.leaves)
    w += 1 + (i64)lf.faces.size() + (i64)lf.sites.size();
  return w;
}

i64 wedge_words(const WedgeIndex& wi) {
  return 2 + (i64)(wi.parent.size() + wi.fwd.size() + wi.bwd.size() +
                   wi.tin.size() + wi.tout.size());
}

i64 locator_words(const EdgeLocator& loc) {
  i64 w = 6 + wedge_words(loc.du) + wedge_words(loc.dv);
  for (const StripIndex& s : loc.strips)
    w += 3 + (i64)(s.jf.size() + s.jpf.size()) +
         (i64)(s.f_lo.size() + s.f_hi.size() + 7) / 8;
  w += (i64)(loc.f_uv.size() + 7) / 8 + (i64)loc.face_pick.size();
  return w;
}

// Deterministic jitter used only for Voronoi tie retries; small enough to
// stay below one unit of base weight.
i128 retry_jitter(u64 u, u64 ctx, u64 attempt, u64 pos) {
  Perturbation p{0x7e57u ^ (attempt * 0x9e3779b97f4a7c15ULL)};
  return (i128)(p.word(u * 0x100000001b3ULL + ctx * 131 + pos) & 0xffffu);
}

}  // namespace

DistanceOracle preprocess(const EmbeddedGraph& gin, i32 r,
                          const OracleOptions& opt) {
  DistanceOracle o;
  o.g = gin;
  o.pert = Perturbation{opt.pert_seed};
  o.g.perturb(o.pert);
  o.space_only = opt.space_only;
  o.div = build_r_division(o.g, r, opt.divider);
  const i32 n = o.g.n;
  const i32 nb = (i32)o.div.boundary_list.size();
  const i32 nr = (i32)o.div.regions.size();
  i32 threads = resolve_threads(opt.threads);

  o.home_region.assign(n, -1);
  for (i32 v = 0; v < n; v++)
    if (!o.div.is_boundary[v] && !o.div.regions_of_vertex[v].empty())
      o.home_region[v] = o.div.regions_of_vertex[v][0];

  for (const Region& reg : o.div.regions)
    o.space.division += (i64)reg.g.n + 2 * (i64)reg.g.m();

  // boundary tables, both directions
  o.space.boundary_tables = 4 * (i64)nb * n;  // base + key words per entry
  if (!opt.space_only) {
    o.from_b.resize(nb);
    o.to_b.resize(nb);
    o.to_b_key.resize(nb);
  }
  // to-boundary rows are needed for site weights even in accounting runs
  std::vector<std::vector<i64>> to_b(nb);
  std::vector<std::vector<i128>> to_b_key(nb);
  for (i32 bi = 0; bi < nb; bi++) {
    i32 b = o.div.boundary_list[bi];
    SpResult rev = sssp(o.g, b, true);
    to_b[bi].resize(n);
    to_b_key[bi].resize(n);
    for (i32 v = 0; v < n; v++) {
      to_b[bi][v] = rev.dist[v].reported();
      to_b_key[bi][v] = rev.dist[v].key;
    }
    if (!opt.space_only) {
      SpResult fwd = sssp(o.g, b, false);
      o.from_b[bi].resize(n);
      for (i32 v = 0; v < n; v++) o.from_b[bi][v] = fwd.dist[v].reported();
      o.to_b[bi] = to_b[bi];
      o.to_b_key[bi] = to_b_key[bi];
    }
  }

  // region tables over internal pairs, boundary clique shortcuts
  o.internals.resize(nr);
  o.local_of.resize(nr);
  if (!opt.space_only) o.pair_table.resize(nr);
  for (i32 ri = 0; ri < nr; ri++) {
    const Region& reg = o.div.regions[ri];
    std::vector<i32> internal_local;
    for (i32 l = 0; l < reg.g.n; l++)
      if (!reg.on_hole[l]) {
        o.local_of[ri][reg.v_global[l]] = l;
        internal_local.push_back(l);
      }
    // deterministic order by global id
    std::sort(internal_local.begin(), internal_local.end(),
              [&](i32 a, i32 b) { return reg.v_global[a] < reg.v_global[b]; });
    for (i32 l : internal_local) o.internals[ri].push_back(reg.v_global[l]);
    i64 cnt = (i64)internal_local.size();
    o.space.region_tables += cnt * cnt;
    if (opt.space_only) continue;

    // local digraph: region edges plus a boundary clique of G-distances
    struct Arc {
      i32 to;
      i64 w;
    };
    std::vector<std::vector<Arc>> adj(reg.g.n);
    for (i32 e = 0; e < reg.g.m(); e++) {
      if (reg.e_global[e] == -1) continue;
      const EdgeRec& er = reg.g.edges[e];
      if (!er.wab.infinite) adj[er.a].push_back({er.b, er.wab.base});
      if (!er.wba.infinite) adj[er.b].push_back({er.a, er.wba.base});
    }
    std::vector<i32> blocal;
    for (i32 l = 0; l < reg.g.n; l++)
      if (reg.on_hole[l]) blocal.push_back(l);
    for (i32 x : blocal)
      for (i32 y : blocal) {
        if (x == y) continue;
        i32 gy = o.div.boundary_index[reg.v_global[y]];
        i64 d = o.from_b[o.div.boundary_index[reg.v_global[x]]]
                        [reg.v_global[y]];
        (void)gy;
        if (d != kInf) adj[x].push_back({y, d});
      }
    i64 cntl = (i64)internal_local.size();
    o.pair_table[ri].assign(cntl * cntl, kInf);
    std::vector<i32> pos(reg.g.n, -1);
    for (i64 q = 0; q < cntl; q++) pos[internal_local[q]] = (i32)q;
    std::vector<i64> dist(reg.g.n);
    std::vector<char> done(reg.g.n);
    for (i64 q = 0; q < cntl; q++) {
      i32 s = internal_local[q];
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(done.begin(), done.end(), 0);
      using Item = std::pair<i64, i32>;
      std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
      dist[s] = 0;
      pq.push({0, s});
      while (!pq.empty()) {
        auto [dc, x] = pq.top();
        pq.pop();
        if (done[x]) continue;
        done[x] = 1;
        for (const Arc& a : adj[x])
          if (!done[a.to] && dc + a.w < dist[a.to]) {
            dist[a.to] = dc + a.w;
            pq.push({dist[a.to], a.to});
          }
      }
      for (i64 p = 0; p < cntl; p++)
        o.pair_table[ri][q * cntl + p] = dist[internal_local[p]];
    }
  }

  // hosts and edge locators
  o.region_ctxs.resize(nr);
  u64 pert_base = u64(1) << 24;
  for (i32 ri = 0; ri < nr; ri++) {
    const Region& reg = o.div.regions[ri];
    for (i32 h = 0; h < (i32)reg.holes.size(); h++) {
      HoleCtx ctx;
      ctx.host = build_region_host(reg, h, pert_base, o.pert);
      pert_base += u64(1) << 16;
      ctx.region = ri;
      ctx.hole = h;
      i32 k = ctx.host.k();
      ctx.direct = k < 3;
      for (i32 t = 0; t < k; t++) {
        i32 gsite = reg.v_global[ctx.host.hole_verts[t]];
        ctx.site_bidx.push_back(o.div.boundary_index[gsite]);
      }
      const EmbeddedGraph& hg = ctx.host.g;
      ctx.loc_of_dart.assign(hg.dart_count(), -1);
      if (!ctx.direct) {
        std::vector<char> filler(hg.n, 0);
        for (i32 f : ctx.host.fillers) filler[f] = 1;
        for (i32 d = 0; d < hg.dart_count(); d++) {
          i32 u = hg.tail(d), v = hg.head(d);
          if (filler[u] || filler[v] || u == v) continue;
          EdgeLocator loc = build_edge_locator(ctx.host, u, v);
          o.space.locators += locator_words(loc);
          if (!opt.space_only) {
            ctx.loc_of_dart[d] = (i32)ctx.locs.size();
            ctx.locs.push_back(std::move(loc));
          }
        }
      }
      o.region_ctxs[ri].push_back((i32)o.ctxs.size());
      o.ctxs.push_back(std::move(ctx));
    }
  }
  // the moves above invalidated nothing: deque elements are stable, but the
  // locators hold host pointers, so rebind them now that ctxs are final
  for (HoleCtx& ctx : o.ctxs)
    for (EdgeLocator& loc : ctx.locs) {
      loc.host = &ctx.host;
      loc.du.host = &ctx.host;
      loc.dv.host = &ctx.host;
    }

  // decomposition trees per (u, region, hole)
  o.trees.resize(o.ctxs.size());
  for (size_t ci = 0; ci < o.ctxs.size(); ci++) {
    HoleCtx& ctx = o.ctxs[ci];
    if (ctx.direct) continue;
    const Region& reg = o.div.regions[ctx.region];
    std::vector<char> in_region(n, 0);
    for (i32 gv : reg.globals) in_region[gv] = 1;
    i32 k = ctx.host.k();
    if (!opt.space_only) o.trees[ci].resize(n);

    std::vector<i64> tw(threads, 0);
    std::vector<i64> retries(threads, 0), fallbacks(threads, 0);
    auto worker = [&](i32 tid) {
      for (i32 u = tid; u < n; u += threads) {
        if (in_region[u]) continue;
        std::vector<Cost> weights(k);
        bool any = false;
        for (i32 t = 0; t < k; t++) {
          i64 base = to_b[ctx.site_bidx[t]][u];
          if (base == kInf) {
            weights[t] = Cost{1, (i128)t, 0};
          } else {
            weights[t] = Cost{0, to_b_key[ctx.site_bidx[t]][u], base};
            any = true;
          }
        }
        if (!any) continue;
        DecompTree tree;
        bool built = false;
        for (u64 attempt = 0; attempt < 4 && !built; attempt++) {
          std::vector<Cost> w = weights;
          if (attempt)
            for (i32 t = 0; t < k; t++)
              w[t].key += retry_jitter(u, ci, attempt, t);
          try {
            VoronoiDiagram vd = compute_cells(ctx.host, w);
            if (vd.tie) {
              retries[tid]++;
              continue;
            }
            VorMultigraph vor = build_vor(vd);
            TriVor tv = build_trivor(vor, vd);
            tree = decompose(tv, vd);
            built = true;
          } catch (const std::exception&) {
            retries[tid]++;
          }
        }
        if (!built) {
          fallbacks[tid]++;
          continue;  // empty tree: direct enumeration at query time
        }
        tw[tid] += tree_words(tree);
        if (!opt.space_only) o.trees[ci][u] = std::move(tree);
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (i32 t = 0; t < threads; t++) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }
    for (i32 t = 0; t < threads; t++) {
      o.space.decomp_trees += tw[t];
      o.vor_retries += retries[t];
      o.vor_fallbacks += fallbacks[t];
    }
  }
  return o;
}

std::vector<i32> locate_candidate_sites(const DistanceOracle& o, i32 u,
                                        i32 ctx_id, i32 v_local) {
  const HoleCtx& ctx = o.ctxs[ctx_id];
  const RegionHost& host = ctx.host;
  i32 k = host.k();
  o.locate_calls++;
  auto all_sites = [&] {
    std::vector<i32> out(k);
    for (i32 t = 0; t < k; t++) out[t] = t;
    return out;
  };
  if (ctx.direct) return all_sites();
  const DecompTree& tree = o.trees[ctx_id][u];
  if (tree.nodes.empty() && tree.leaves.empty()) return all_sites();
  i32 cur = tree.root;
  while (cur >= 0) {
    const DecompNode& node = tree.nodes[cur];
    const SeparatorRep& rep = node.rep;
    i32 dart = -1;
    for (i32 d : host.g.rot[rep.x])
      if (host.g.head(d) == rep.y) dart = d;
    if (dart == -1 || ctx.loc_of_dart[dart] == -1)
      throw std::runtime_error("locate: separator edge has no locator");
    const EdgeLocator& loc = ctx.locs[ctx.loc_of_dart[dart]];
    i32 a = host.hole_pos[rep.b1];
    i32 b = a + imod(host.hole_pos[rep.b2] - a, k);
    o.box_calls++;
    bool inside = box_query(loc, v_local, a, b);
    cur = inside ? node.inner : node.outer;
  }
  const DecompLeaf& leaf = tree.leaves[-1 - cur];
  std::vector<i32> out;
  for (i32 s : leaf.sites) {
    i32 pos = host.hole_pos[s];
    if (std::find(out.begin(), out.end(), pos) == out.end()) out.push_back(pos);
  }
  return out;
}

i64 query(const DistanceOracle& o, i32 u, i32 v) {
  if (u < 0 || v < 0 || u >= o.g.n || v >= o.g.n)
    throw std::out_of_range("query: vertex id out of range");
  if (o.space_only)
    throw std::logic_error("query: oracle built for space accounting only");
  if (u == v) return 0;
  if (o.div.boundary_index[u] != -1) return o.from_b[o.div.boundary_index[u]][v];
  if (o.div.boundary_index[v] != -1) return o.to_b[o.div.boundary_index[v]][u];
  i32 ru = o.home_region[u], rv = o.home_region[v];
  if (ru == rv) {
    const auto& tbl = o.pair_table[rv];
    i64 cnt = (i64)o.internals[rv].size();
    i64 qi = std::lower_bound(o.internals[rv].begin(), o.internals[rv].end(),
                              u) -
             o.internals[rv].begin();
    i64 qj = std::lower_bound(o.internals[rv].begin(), o.internals[rv].end(),
                              v) -
             o.internals[rv].begin();
    return tbl[qi * cnt + qj];
  }
  i64 best = kInf;
  auto it = o.local_of[rv].find(v);
  if (it == o.local_of[rv].end())
    throw std::logic_error("query: internal vertex missing from region");
  i32 v_local = it->second;
  for (i32 ctx_id : o.region_ctxs[rv]) {
    const HoleCtx& ctx = o.ctxs[ctx_id];
    for (i32 pos : locate_candidate_sites(o, u, ctx_id, v_local)) {
      i32 bi = ctx.site_bidx[pos];
      i64 d1 = o.to_b[bi][u], d2 = o.from_b[bi][v];
      if (d1 != kInf && d2 != kInf) best = std::min(best, d1 + d2);
    }
  }
  return best;
}

}  // namespace pdo
