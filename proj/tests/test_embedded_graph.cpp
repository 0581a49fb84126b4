#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "pdo/generators.hpp"
#include "pdo/graph_io.hpp"

using namespace pdo;

namespace {

// Plain 3-cycle: two faces, dual has 2 vertices joined by 3 parallel edges.
EmbeddedGraph triangle() {
  EmbeddedGraph g;
  g.n = 3;
  g.rot.resize(3);
  Weight one{1, false};
  g.add_edge(0, 1, one, one);
  g.add_edge(1, 2, one, one);
  g.add_edge(2, 0, one, one);
  g.rot[0] = {0, 5};
  g.rot[1] = {2, 1};
  g.rot[2] = {4, 3};
  g.finalize();
  return g;
}

}  // namespace

TEST_CASE("single bidirected edge: one face of length 2") {
  EmbeddedGraph g;
  g.n = 2;
  g.rot.resize(2);
  g.add_edge(0, 1, {3, false}, {4, false});
  g.rot[0] = {0};
  g.rot[1] = {1};
  g.finalize();
  CHECK(g.face_count() == 1);
  CHECK(g.faces[0].len == 2);
  CHECK(g.cost(0).base == 3);
  CHECK(g.cost(1).base == 4);
}

TEST_CASE("3x3 grid: 12 edges, 5 faces, outer face degree 8") {
  EmbeddedGraph g = gen_grid(3, 3);
  CHECK(g.n == 9);
  CHECK(g.m() == 12);
  CHECK(g.face_count() == 5);
  int outer = -1, quads = 0;
  for (i32 f = 0; f < g.face_count(); f++) {
    if (g.faces[f].len == 8) outer = f;
    if (g.faces[f].len == 4) quads++;
  }
  CHECK(outer != -1);
  CHECK(quads == 4);
  DualView dual{g};
  CHECK(dual.vertex_count() == 5);
  CHECK(dual.dual_degree(outer) == 8);
}

TEST_CASE("triangle dual: 2 faces, 3 dual edges between them") {
  EmbeddedGraph g = triangle();
  CHECK(g.face_count() == 2);
  DualView dual{g};
  for (i32 e = 0; e < 3; e++) {
    auto [f1, f2] = dual.ends(e);
    CHECK(f1 != f2);
  }
}

TEST_CASE("wheel(6): 7 faces") {
  EmbeddedGraph g = gen_wheel(6);
  CHECK(g.n == 7);
  CHECK(g.m() == 12);
  CHECK(g.face_count() == 7);
  int tris = 0, hex = 0;
  for (auto& f : g.faces) (f.len == 3 ? tris : hex)++;
  CHECK(tris == 6);
  CHECK(hex == 1);
}

TEST_CASE("bad rotation systems are rejected") {
  EmbeddedGraph g;
  g.n = 2;
  g.rot.resize(2);
  g.add_edge(0, 1, {1, false}, {1, false});
  g.rot[0] = {1};  // dart 1 has tail 1, not 0
  g.rot[1] = {0};
  CHECK_THROWS(g.finalize());

  EmbeddedGraph h;
  h.n = 2;
  h.rot.resize(2);
  h.add_edge(0, 1, {1, false}, {1, false});
  h.rot[0] = {0, 0};  // duplicate
  h.rot[1] = {1};
  CHECK_THROWS(h.finalize());
}

TEST_CASE("non-planar rotation fails the Euler check") {
  // K5 with an arbitrary rotation order cannot satisfy Euler's formula.
  EmbeddedGraph g;
  g.n = 5;
  g.rot.resize(5);
  Weight one{1, false};
  for (i32 a = 0; a < 5; a++)
    for (i32 b = a + 1; b < 5; b++) {
      i32 e = g.add_edge(a, b, one, one);
      g.rot[a].push_back(2 * e);
      g.rot[b].push_back(2 * e + 1);
    }
  CHECK_THROWS(g.finalize());
}

TEST_CASE("random triangulation is maximal planar") {
  for (u64 seed : {1ULL, 7ULL, 99ULL}) {
    EmbeddedGraph g = gen_random_triangulation(40, seed, 1, 50);
    CHECK(g.m() == 3 * g.n - 6);
    for (auto& f : g.faces) CHECK(f.len == 3);
  }
}

TEST_CASE("graph file format round-trips bit-exactly") {
  EmbeddedGraph g = gen_grid(4, 3, 5, 1, 9);
  g.edges[2].wba = {0, true};  // one-way street
  std::ostringstream s1;
  write_graph(s1, g);
  std::istringstream in(s1.str());
  EmbeddedGraph h = read_graph(in);
  std::ostringstream s2;
  write_graph(s2, h);
  CHECK(s1.str() == s2.str());
  CHECK(h.grid_w == 4);
  CHECK(h.edges[2].wba.infinite);
}

TEST_CASE("format errors are reported") {
  std::istringstream bad1("plain 1\n2 1\n0 1 1 1\n1 0\n1 1\n");
  CHECK_THROWS(read_graph(bad1));
  std::istringstream bad2("pdo-graph 1\n2 1\n0 5 1 1\n1 0\n1 1\n");
  CHECK_THROWS(read_graph(bad2));
  std::istringstream bad3("pdo-graph 1\n2 1\n0 1 -4 1\n1 0\n1 1\n");
  CHECK_THROWS(read_graph(bad3));
}
