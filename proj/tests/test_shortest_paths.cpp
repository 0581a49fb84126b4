#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdo/generators.hpp"
#include "pdo/shortest_paths.hpp"

using namespace pdo;

TEST_CASE("unit grid distances are Manhattan") {
  EmbeddedGraph g = gen_grid(6, 5);
  g.perturb({123});
  auto r = sssp(g, 0);
  CHECK_FALSE(r.tie);
  for (i32 y = 0; y < 5; y++)
    for (i32 x = 0; x < 6; x++) CHECK(r.dist[y * 6 + x].base == x + y);
}

TEST_CASE("bucket engine agrees with closed form on a large unit grid") {
  EmbeddedGraph g = gen_grid(70, 70);  // n > 4096 selects the bucket engine
  g.perturb({9});
  auto r = sssp(g, 70 * 35 + 17);
  CHECK_FALSE(r.tie);
  for (i32 y = 0; y < 70; y += 13)
    for (i32 x = 0; x < 70; x += 11)
      CHECK(r.dist[y * 70 + x].base == std::abs(x - 17) + std::abs(y - 35));
  // And the tree is usable: parents point along shortest paths.
  auto h = sssp(g, 70 * 35 + 17, true);
  for (i32 v = 0; v < g.n; v += 97) CHECK(h.dist[v].base == r.dist[v].base);
}

TEST_CASE("one-way edge gives asymmetric distances") {
  EmbeddedGraph g = gen_grid(2, 2);
  // Make 0->1 one-way (reverse infinite).
  for (auto& e : g.edges)
    if (e.a == 0 && e.b == 1) e.wba = {0, true};
  g.perturb({5});
  auto f = sssp(g, 0);
  CHECK(f.dist[1].base == 1);
  auto b = sssp(g, 1);
  CHECK(b.dist[0].base == 3);  // must go 1 -> 3 -> 2 -> 0
}

TEST_CASE("reverse mode computes distances into the root") {
  EmbeddedGraph g = gen_grid(5, 4, 3, 1, 20);
  g.perturb({77});
  auto into7 = sssp(g, 7, true);
  for (i32 v = 0; v < g.n; v++) {
    auto from_v = sssp(g, v);
    CHECK(from_v.dist[7].base == into7.dist[v].base);
    CHECK(from_v.dist[7].key == into7.dist[v].key);
  }
}

TEST_CASE("paths through infinite edges rank behind all finite paths") {
  EmbeddedGraph g = gen_grid(3, 2);
  for (auto& e : g.edges)
    if (e.a == 1 && e.b == 2) {
      e.wab = {0, true};
      e.wba = {0, true};
    }
  g.perturb({4});
  auto r = sssp(g, 0);
  CHECK(r.dist[2].tier == 0);
  CHECK(r.dist[2].base == 4);  // around the bottom row, not through the cut
}

TEST_CASE("multi_source equals sssp from a materialised super-source") {
  // Wheel rim as sites with additive weights; the hub plays super-source on
  // a second copy where spoke weights are the site weights.
  i64 w[6] = {0, 10, 4, 7, 2, 25};
  EmbeddedGraph g = gen_wheel(6);
  for (i32 i = 0; i < 6; i++) g.edges[6 + i].wab = g.edges[6 + i].wba = {w[i], false};
  g.perturb({42});
  auto super = sssp(g, 6);

  // Same search expressed as multi_source on the wheel without using the hub:
  // distances to rim vertices must match (hub spoke = additive site weight
  // plus that spoke's perturbation word, which we fold into the site cost).
  std::vector<std::pair<i32, Cost>> sites;
  for (i32 i = 0; i < 6; i++)
    sites.push_back({i, Cost{0, ((i128)w[i] << kPertBits) + (i128)g.edges[6 + i].pert,
                             w[i]}});
  auto ms = multi_source(g, sites);
  for (i32 i = 0; i < 6; i++) {
    CHECK(ms.dist[i].base == super.dist[i].base);
    CHECK(ms.dist[i].key == super.dist[i].key);
    CHECK(ms.site[i] >= 0);
    CHECK(ms.site[i] < 6);
  }
}

TEST_CASE("site vertices own themselves even when relaxed via another site") {
  // Path 0-1-2 with sites 0 (weight 0) and 2 (weight 100): vertex 2's best
  // path comes from site 0 but it still owns itself.
  EmbeddedGraph g;
  g.n = 3;
  g.rot.resize(3);
  g.add_edge(0, 1, {1, false}, {1, false});
  g.add_edge(1, 2, {1, false}, {1, false});
  g.rot[0] = {0};
  g.rot[1] = {1, 2};
  g.rot[2] = {3};
  g.finalize();
  g.perturb({8});
  std::vector<std::pair<i32, Cost>> sites = {
      {0, Cost::zero()}, {2, Cost{0, (i128)100 << kPertBits, 100}}};
  auto ms = multi_source(g, sites);
  CHECK(ms.site[0] == 0);
  CHECK(ms.site[1] == 0);
  CHECK(ms.site[2] == 2);
  CHECK(ms.dist[2].base == 2);
}

TEST_CASE("uniqueness audit flags exact ties") {
  EmbeddedGraph g = gen_grid(2, 2);  // two equal 0->3 paths when unperturbed
  auto r = sssp(g, 0);               // perts all zero
  CHECK(r.tie);
  g.perturb({1});
  auto r2 = sssp(g, 0);
  CHECK_FALSE(r2.tie);
}
