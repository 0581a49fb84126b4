#include "pdo/generators.hpp"

#include <array>

namespace pdo {

EmbeddedGraph gen_grid(i32 w, i32 h, u64 seed, i64 wlo, i64 whi) {
  if (w < 2 || h < 2) throw std::runtime_error("grid needs w,h >= 2");
  EmbeddedGraph g;
  g.grid_w = w;
  g.grid_h = h;
  g.n = w * h;
  g.rot.resize(g.n);
  Rng rng(seed);
  auto id = [&](i32 x, i32 y) { return y * w + x; };
  std::vector<i32> right(g.n, -1), down(g.n, -1);
  auto mkw = [&]() { return Weight{rng.range(wlo, whi), false}; };
  for (i32 y = 0; y < h; y++)
    for (i32 x = 0; x < w; x++) {
      if (x + 1 < w) right[id(x, y)] = g.add_edge(id(x, y), id(x + 1, y), mkw(), mkw());
      if (y + 1 < h) down[id(x, y)] = g.add_edge(id(x, y), id(x, y + 1), mkw(), mkw());
    }
  for (i32 y = 0; y < h; y++)
    for (i32 x = 0; x < w; x++) {
      auto& r = g.rot[id(x, y)];
      if (y > 0) r.push_back(2 * down[id(x, y - 1)] + 1);      // up
      if (x + 1 < w) r.push_back(2 * right[id(x, y)]);         // right
      if (y + 1 < h) r.push_back(2 * down[id(x, y)]);          // down
      if (x > 0) r.push_back(2 * right[id(x - 1, y)] + 1);     // left
    }
  g.finalize();
  return g;
}

EmbeddedGraph gen_wheel(i32 k) {
  if (k < 3) throw std::runtime_error("wheel needs k >= 3");
  EmbeddedGraph g;
  g.n = k + 1;
  g.rot.resize(g.n);
  Weight one{1, false};
  std::vector<i32> rim(k), spoke(k);
  for (i32 i = 0; i < k; i++) rim[i] = g.add_edge(i, (i + 1) % k, one, one);
  for (i32 i = 0; i < k; i++) spoke[i] = g.add_edge(i, k, one, one);
  for (i32 i = 0; i < k; i++) {
    g.rot[i] = {2 * rim[i],                      // i -> i+1
                2 * spoke[i],                    // i -> hub
                2 * rim[(i + k - 1) % k] + 1};   // i -> i-1
  }
  for (i32 i = 0; i < k; i++) g.rot[k].push_back(2 * spoke[i] + 1);
  g.finalize();
  return g;
}

EmbeddedGraph gen_random_triangulation(i32 n, u64 seed, i64 wlo, i64 whi) {
  if (n < 3) throw std::runtime_error("triangulation needs n >= 3");
  EmbeddedGraph g;
  Rng rng(seed);
  auto mkw = [&]() { return Weight{rng.range(wlo, whi), false}; };
  g.n = 3;
  g.rot.resize(3);
  g.add_edge(0, 1, mkw(), mkw());
  g.add_edge(1, 2, mkw(), mkw());
  g.add_edge(2, 0, mkw(), mkw());
  g.rot[0] = {0, 5};
  g.rot[1] = {2, 1};
  g.rot[2] = {4, 3};
  // Face triples maintained by hand; both faces of the triangle, walk order.
  std::vector<std::array<i32, 3>> faces = {{0, 2, 4}, {1, 5, 3}};
  auto tail_of = [&](i32 d) { return g.tail(d); };
  auto insert_after = [&](i32 v, i32 after, i32 nd) {
    auto& r = g.rot[v];
    for (size_t i = 0; i < r.size(); i++)
      if (r[i] == after) {
        r.insert(r.begin() + i + 1, nd);
        return;
      }
    throw std::runtime_error("internal: dart not in rotation");
  };
  while (g.n < n) {
    i32 fi = (i32)rng.below(faces.size());
    auto [d0, d1, d2] = faces[fi];
    i32 t0 = tail_of(d0), t1 = tail_of(d1), t2 = tail_of(d2);
    i32 u = g.add_vertex();
    i32 e0 = g.add_edge(u, t0, mkw(), mkw());
    i32 e1 = g.add_edge(u, t1, mkw(), mkw());
    i32 e2 = g.add_edge(u, t2, mkw(), mkw());
    g.rot[u] = {2 * e0, 2 * e2, 2 * e1};
    insert_after(t0, EmbeddedGraph::twin(d2), 2 * e0 + 1);
    insert_after(t1, EmbeddedGraph::twin(d0), 2 * e1 + 1);
    insert_after(t2, EmbeddedGraph::twin(d1), 2 * e2 + 1);
    faces[fi] = {2 * e0, d0, 2 * e1 + 1};
    faces.push_back({2 * e1, d1, 2 * e2 + 1});
    faces.push_back({2 * e2, d2, 2 * e0 + 1});
  }
  g.finalize();
  return g;
}

}  // namespace pdo
