#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdo/brute.hpp"
#include "pdo/generators.hpp"
#include "pdo/voronoi.hpp"

using namespace pdo;

namespace {

Cost weight_of(i64 v) { return {0, (i128)v << kPertBits, v}; }

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

std::vector<Cost> flat_weights(i32 k, i64 v = 0) {
  return std::vector<Cost>(k, weight_of(v));
}

}  // namespace

TEST_CASE("wheel cells with flat weights") {
  for (u64 seed : {1, 2, 3, 4, 5}) {
    RegionHost host = hex_host(seed);
    REQUIRE(host.k() == 6);
    auto w = flat_weights(6);
    VoronoiDiagram vd = compute_cells(host, w);
    CHECK(!vd.tie);
    CHECK(audit_voronoi(vd).ok);
    for (i32 i = 0; i < 6; i++) CHECK(vd.cell_of[host.hole_verts[i]] == i);
    // The hub joins exactly one rim cell.
    i32 hub_cell = vd.cell_of[6];
    CHECK(hub_cell >= 0);
    CHECK(hub_cell < 6);
    CHECK(vd.cell_of == brute_voronoi(host, w));
  }
}

TEST_CASE("wheel cells with one light site") {
  RegionHost host = hex_host(7);
  std::vector<Cost> w(6, weight_of(10));
  w[host.hole_pos[0]] = weight_of(0);
  VoronoiDiagram vd = compute_cells(host, w);
  CHECK(audit_voronoi(vd).ok);
  // Hub goes to the light site; rim vertices still own themselves.
  CHECK(vd.cell_of[6] == host.hole_pos[0]);
  for (i32 i = 0; i < 6; i++) CHECK(vd.cell_of[host.hole_verts[i]] == i);
  CHECK(vd.cell_of == brute_voronoi(host, w));
}

TEST_CASE("single-site hole swallows everything") {
  EmbeddedGraph g;
  g.allow_multi = true;
  g.add_vertex();
  g.add_vertex();
  g.add_edge(0, 0, {1, false}, {1, false});
  g.add_edge(0, 1, {1, false}, {1, false});
  g.rot[0] = {0, 1, 2};
  g.rot[1] = {3};
  g.finalize();
  g.perturb({11});
  i32 f = face_of_len(g, 1);
  REQUIRE(f >= 0);
  RegionHost host = host_from_face(g, f);
  REQUIRE(host.k() == 1);
  auto w = flat_weights(1);
  VoronoiDiagram vd = compute_cells(host, w);
  CHECK(vd.cell_of == std::vector<i32>{0, 0});
  CHECK(audit_voronoi(vd).ok);
  VorMultigraph vor = build_vor(vd);
  CHECK(vor.ne() == 0);
  CHECK(vor.nv() == 1);
  CHECK(vd.cell_of == brute_voronoi(host, w));
}

TEST_CASE("two-site hole gives one cycle through v_inf") {
  // Two parallel a-b edges bounding the hole, a path a-x-y-b below.
  EmbeddedGraph g;
  g.allow_multi = true;
  for (i32 i = 0; i < 4; i++) g.add_vertex();
  g.add_edge(0, 1, {1, false}, {1, false});  // upper arc
  g.add_edge(0, 1, {1, false}, {1, false});  // middle
  g.add_edge(0, 2, {1, false}, {1, false});
  g.add_edge(2, 3, {1, false}, {1, false});
  g.add_edge(3, 1, {1, false}, {1, false});
  g.rot[0] = {0, 2, 4};
  g.rot[1] = {1, 9, 3};
  g.rot[2] = {5, 6};
  g.rot[3] = {7, 8};
  g.finalize();
  for (u64 seed : {21, 22, 23, 24}) {
    g.perturb({seed});
    i32 f = face_of_len(g, 2);
    REQUIRE(f >= 0);
    RegionHost host = host_from_face(g, f);
    REQUIRE(host.k() == 2);
    auto w = flat_weights(2);
    VoronoiDiagram vd = compute_cells(host, w);
    CHECK(audit_voronoi(vd).ok);
    CHECK(vd.cell_of == brute_voronoi(host, w));
    VorMultigraph vor = build_vor(vd);
    CHECK(audit_vor(vor, vd).ok);
    CHECK(vor.nv() == 1);
    CHECK(vor.ne() == 1);
    CHECK(vor.edges[0].x == 0);
    CHECK(vor.edges[0].y == 0);
    REQUIRE(vor.cycles.size() == 2);
    CHECK(vor.cycle_cell[0] != vor.cycle_cell[1]);
  }
}

TEST_CASE("wheel vor multigraph structure") {
  RegionHost host = hex_host(3);
  auto w = flat_weights(6);
  VoronoiDiagram vd = compute_cells(host, w);
  VorMultigraph vor = build_vor(vd);
  CHECK(audit_vor(vor, vd).ok);
  // Two triangles beside the hub's site have only two cells; the other
  // four faces carry three cells each and stay as vor vertices.
  CHECK(vor.nv() == 5);
  for (i32 v = 1; v < vor.nv(); v++) CHECK(vor.degree(v) == 3);
  CHECK(vor.degree(0) == 6);
  CHECK(vor.ne() == 9);
  CHECK(vor.cycles.size() == 6);
}

TEST_CASE("wheel trivor structure") {
  RegionHost host = hex_host(3);
  auto w = flat_weights(6);
  VoronoiDiagram vd = compute_cells(host, w);
  VorMultigraph vor = build_vor(vd);
  TriVor tv = build_trivor(vor, vd);
  CHECK(audit_trivor(tv, vor, vd).ok);
  CHECK(tv.face_count == tv.ne() - tv.nv + 2);
  // Star edges per cell match the distinct off-v_inf vertices of its cycle.
  std::vector<i32> stars(vd.k(), 0);
  for (const TriVorEdge& e : tv.edges)
    if (e.star()) stars[e.cell]++;
  for (i32 c = 0; c < vd.k(); c++) {
    std::vector<i32> verts;
    for (i32 d : vor.cycles[vor.cell_cycle[c]]) {
      i32 v = vor.tail(d);
      if (v == 0) continue;
      bool seen = false;
      for (i32 u : verts) seen |= u == v;
      if (!seen) verts.push_back(v);
    }
    CHECK(stars[c] == (i32)verts.size());
  }
}

TEST_CASE("random region hosts match the brute oracle") {
  Perturbation pert{77};
  Rng rng(9);
  for (u64 seed : {1, 2, 3}) {
    EmbeddedGraph g = gen_random_triangulation(80, seed, 1, 8);
    g.perturb({seed * 31 + 1});
    RDivision div = build_r_division(g, 25);
    u64 base = 1u << 20;
    for (const Region& reg : div.regions) {
      for (i32 h = 0; h < (i32)reg.holes.size(); h++) {
        RegionHost host = build_region_host(reg, h, base, pert);
        base += 1u << 12;
        std::vector<Cost> w(host.k());
        for (i32 i = 0; i < host.k(); i++)
          w[i] = weight_of(rng.range(0, 20));
        VoronoiDiagram vd = compute_cells(host, w);
        auto a = audit_voronoi(vd);
        INFO((a.problems.empty() ? "" : a.problems[0]));
        CHECK(a.ok);
        CHECK(vd.cell_of == brute_voronoi(host, w));
        VorMultigraph vor = build_vor(vd);
        auto av = audit_vor(vor, vd);
        INFO((av.problems.empty() ? "" : av.problems[0]));
        CHECK(av.ok);
        if (vd.k() >= 3) {
          TriVor tv = build_trivor(vor, vd);
          auto at = audit_trivor(tv, vor, vd);
          INFO((at.problems.empty() ? "" : at.problems[0]));
          CHECK(at.ok);
        }
      }
    }
  }
}
