#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pdo/brute.hpp"
#include "pdo/generators.hpp"
#include "pdo/point_location.hpp"
#include "pdo/r_division.hpp"

using namespace pdo;

namespace {

i32 face_of_len(const EmbeddedGraph& g, i32 len) {
  for (i32 f = 0; f < g.face_count(); f++)
    if (g.faces[f].len == len) return f;
  return -1;
}

// Hexagonal wheel host: rim 0..5 on the open hole, hub 6 inside.
RegionHost hex_host(u64 seed) {
  EmbeddedGraph g = gen_wheel(6);
  g.perturb({seed});
  i32 f = face_of_len(g, 6);
  REQUIRE(f >= 0);
  return host_from_face(g, f);
}

std::vector<i32> path_verts(const EmbeddedGraph& g,
                            const std::vector<i32>& parent, i32 x) {
  std::vector<i32> out = {x};
  while (parent[x] != -1) {
    x = g.head(parent[x]);
    out.push_back(x);
  }
  return out;
}

// Closed boundary walk of the wedge between hole positions A and B: up the
// tree from b_A, back down to b_B, then along the hole arc B-1..A.
std::vector<i32> wedge_walk(const RegionHost& host, const WedgeIndex& wi,
                            i32 A, i32 B) {
  const EmbeddedGraph& g = host.g;
  i32 k = host.k();
  std::vector<i32> walk = tree_path_darts(g, wi.parent, host.hole_verts[A]);
  auto pb = tree_path_darts(g, wi.parent, host.hole_verts[B]);
  for (auto it = pb.rbegin(); it != pb.rend(); ++it) walk.push_back(*it ^ 1);
  for (i32 p = (B - 1 + k) % k;; p = (p - 1 + k) % k) {
    walk.push_back(host.hole_darts[p] ^ 1);
    if (p == A) break;
  }
  return walk;
}

std::vector<i32> box_boundary(const RegionHost& host, const EdgeLocator& loc,
                              i32 A, i32 B) {
  const EmbeddedGraph& g = host.g;
  i32 k = host.k();
  std::vector<i32> walk =
      tree_path_darts(g, loc.du.parent, host.hole_verts[A]);
  walk.push_back(loc.uv_dart);
  auto pb = tree_path_darts(g, loc.dv.parent, host.hole_verts[B]);
  for (auto it = pb.rbegin(); it != pb.rend(); ++it) walk.push_back(*it ^ 1);
  for (i32 p = (B - 1 + k) % k;; p = (p - 1 + k) % k) {
    walk.push_back(host.hole_darts[p] ^ 1);
    if (p == A) break;
  }
  return walk;
}

void check_host_wedges(const RegionHost& host, i32 w) {
  const EmbeddedGraph& g = host.g;
  i32 k = host.k();
  WedgeIndex wi = build_wedge_index(host, w);
  for (i32 A = 0; A < k; A++) {
    std::vector<char> onp(g.n, 0);
    for (i32 z : path_verts(g, wi.parent, host.hole_verts[A])) onp[z] = 1;
    for (i32 z = 0; z < g.n; z++)
      CHECK(wedge_query(wi, z, A, A) == (bool)onp[z]);
    for (i32 L = 1; L < k; L++) {
      i32 B = (A + L) % k;
      auto want =
          brute_region_membership(g, host.hole_face, wedge_walk(host, wi, A, B))
              .vert_in;
      for (i32 z = 0; z < g.n; z++)
        CHECK(wedge_query(wi, z, A, A + L) == (bool)want[z]);
    }
  }
}

void check_host_boxes(const RegionHost& host, Rng& rng, i32 tries) {
  const EmbeddedGraph& g = host.g;
  i32 k = host.k();
  for (i32 t = 0; t < tries; t++) {
    i32 e = (i32)rng.below((u64)g.m());
    i32 u = g.tail(2 * e), v = g.head(2 * e);
    if (u == v) continue;
    EdgeLocator loc = build_edge_locator(host, u, v);
    for (i32 A = 0; A < k; A++)
      for (i32 L = 1; L < k; L++) {
        i32 B = (A + L) % k;
        auto pa = path_verts(g, loc.du.parent, host.hole_verts[A]);
        auto pb = path_verts(g, loc.dv.parent, host.hole_verts[B]);
        std::set<i32> sa(pa.begin(), pa.end());
        bool disjoint = true;
        for (i32 z : pb)
          if (sa.count(z)) disjoint = false;
        if (!disjoint) continue;
        auto want = brute_region_membership(g, host.hole_face,
                                            box_boundary(host, loc, A, B))
                        .vert_in;
        for (i32 z = 0; z < g.n; z++) {
          CHECK(box_query(loc, z, A, A + L) == (bool)want[z]);
          CHECK(loc.accesses <= 32);
        }
      }
  }
}

template <typename F>
void for_random_hosts(i32 n, std::initializer_list<u64> seeds, F f) {
  Perturbation pert{77};
  u64 base = 1u << 20;
  for (u64 seed : seeds) {
    EmbeddedGraph g = gen_random_triangulation(n, seed, 1, 8);
    g.perturb({seed * 31 + 1});
    RDivision div = build_r_division(g, 25);
    for (const Region& reg : div.regions)
      for (i32 h = 0; h < (i32)reg.holes.size(); h++) {
        RegionHost host = build_region_host(reg, h, base, pert);
        base += u64(1) << 12;
        if (host.k() < 3) continue;
        f(host);
      }
  }
}

}  // namespace

TEST_CASE("region membership flood fill") {
  RegionHost host = hex_host(5);
  const EmbeddedGraph& g = host.g;
  // a single triangle encloses itself and nothing else
  for (i32 f = 0; f < g.face_count(); f++) {
    if (f == host.hole_face) continue;
    auto walk = g.face_darts(f);
    RegionMembership rm = brute_region_membership(g, host.hole_face, walk);
    i32 faces_in = 0;
    for (i32 q = 0; q < g.face_count(); q++) faces_in += rm.face_in[q];
    CHECK(faces_in == 1);
    CHECK(rm.face_in[f]);
    i32 verts_in = 0;
    for (i32 z = 0; z < g.n; z++) verts_in += rm.vert_in[z];
    CHECK(verts_in == 3);
    for (i32 d : walk) CHECK(rm.vert_in[g.tail(d)]);
  }
  // the full hole walk encloses the whole host
  std::vector<i32> walk(host.hole_darts.begin(), host.hole_darts.end());
  RegionMembership rm = brute_region_membership(g, host.hole_face, walk);
  for (i32 z = 0; z < g.n; z++) CHECK(rm.vert_in[z]);
  for (i32 f = 0; f < g.face_count(); f++)
    CHECK(rm.face_in[f] == (f != host.hole_face));
}

TEST_CASE("wedge index anchors on the wheel") {
  RegionHost host = hex_host(5);
  WedgeIndex wi = build_wedge_index(host, 6);
  // spokes only: hub covered by the first path, b_i first covered at step i
  CHECK(wi.fwd[6] == 0);
  CHECK(wi.fwd[host.hole_verts[0]] == 0);
  CHECK(wi.fwd[host.hole_verts[1]] == 1);
  CHECK(wi.fwd[host.hole_verts[4]] == 4);
  CHECK(wi.bwd[host.hole_verts[5]] == 1);
}

TEST_CASE("wedge queries match flood fill on the wheel") {
  for (u64 seed : {5, 11}) {
    RegionHost host = hex_host(seed);
    for (i32 w = 0; w < host.g.n; w++) check_host_wedges(host, w);
  }
}

TEST_CASE("wedge queries match flood fill on random hosts") {
  Rng rng(3);
  for_random_hosts(80, {1, 2, 3}, [&](const RegionHost& host) {
    for (i32 t = 0; t < 3; t++)
      check_host_wedges(host, (i32)rng.below((u64)host.g.n));
  });
}

TEST_CASE("crossing tree paths on the wheel") {
  RegionHost host = hex_host(5);
  const EmbeddedGraph& g = host.g;
  auto dart = [&](i32 a, i32 b) {
    for (i32 d : g.rot[a])
      if (g.head(d) == b) return d;
    REQUIRE(false);
    return -1;
  };
  std::vector<i32> a = {dart(3, 6), dart(6, 0)};
  std::vector<i32> cross = {dart(1, 6), dart(6, 4)};
  std::vector<i32> touch = {dart(1, 6), dart(6, 2)};
  CHECK(paths_cross(g, a, cross));
  CHECK(paths_cross(g, cross, a));
  CHECK(!paths_cross(g, a, touch));
  CHECK(!paths_cross(g, touch, a));
}

namespace {

// Flood-fill reference: scan every basic wedge, test closed-edge membership,
// assert uniqueness.
i32 reference_buv(const RegionHost& host, const WedgeIndex& wi, i32 uv_edge) {
  const EmbeddedGraph& g = host.g;
  i32 k = host.k();
  i32 hit = -1;
  for (i32 i = 0; i < k; i++) {
    auto pa = tree_path_darts(g, wi.parent, host.hole_verts[i]);
    auto pb = tree_path_darts(g, wi.parent, host.hole_verts[(i + 1) % k]);
    bool on_next = false;
    for (i32 d : pb)
      if ((d >> 1) == uv_edge) on_next = true;
    if (on_next) continue;
    std::vector<i32> walk(pa);
    for (auto it = pb.rbegin(); it != pb.rend(); ++it) walk.push_back(*it ^ 1);
    walk.push_back(host.hole_darts[i] ^ 1);
    auto in = brute_region_membership(g, host.hole_face, walk).face_in;
    bool inside = in[g.face_of[2 * uv_edge]] || in[g.face_of[2 * uv_edge + 1]];
    if (!inside)
      for (i32 d : walk)
        if ((d >> 1) == uv_edge) inside = true;
    if (!inside) continue;
    REQUIRE(hit == -1);
    hit = i;
  }
  return hit;
}

}  // namespace

TEST_CASE("basic wedge of an edge matches the flood fill scan") {
  Rng rng(21);
  for_random_hosts(80, {1, 2}, [&](const RegionHost& host) {
    const EmbeddedGraph& g = host.g;
    for (i32 t = 0; t < 6; t++) {
      i32 e = (i32)rng.below((u64)g.m());
      i32 u = g.tail(2 * e), v = g.head(2 * e);
      if (u == v) continue;
      WedgeIndex wi = build_wedge_index(host, u);
      CHECK(compute_buv(wi, e) == reference_buv(host, wi, e));
      WedgeIndex wj = build_wedge_index(host, v);
      CHECK(compute_buv(wj, e) == reference_buv(host, wj, e));
    }
  });
}

TEST_CASE("strip family covers the hole") {
  // every hole edge lies in exactly one strip span, except the edge at buv
  // which is answered by the stored box face set
  Rng rng(17);
  for_random_hosts(80, {1, 2}, [&](const RegionHost& host) {
    const EmbeddedGraph& g = host.g;
    i32 k = host.k();
    for (i32 t = 0; t < 4; t++) {
      i32 e = (i32)rng.below((u64)g.m());
      i32 u = g.tail(2 * e), v = g.head(2 * e);
      if (u == v) continue;
      EdgeLocator loc = build_edge_locator(host, u, v);
      std::vector<i32> cover(k, 0);
      for (const StripIndex& s : loc.strips)
        for (i32 i = s.i1; i < s.i2; i++) cover[((i % k) + k) % k]++;
      for (i32 i = 0; i < k; i++) {
        if (i == loc.buv) {
          CHECK(cover[i] == 0);
          CHECK(loc.has_fuv);
        } else {
          CHECK(cover[i] == 1);
        }
      }
    }
  });
}

TEST_CASE("box queries match flood fill") {
  Rng rng(9);
  {
    RegionHost host = hex_host(5);
    check_host_boxes(host, rng, 6);
  }
  for_random_hosts(80, {1, 2, 3}, [&](const RegionHost& host) {
    check_host_boxes(host, rng, 3);
  });
}
