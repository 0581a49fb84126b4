#pragma once
#include "pdo/embedded_graph.hpp"

namespace pdo {

// Small deterministic generator stream (splitmix64), stable across platforms.
struct Rng {
  u64 s;
  explicit Rng(u64 seed) : s(seed) {}
  u64 next() {
    u64 z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  u64 below(u64 k) { return next() % k; }
  i64 range(i64 lo, i64 hi) {  // inclusive
    return lo >= hi ? lo : lo + (i64)below((u64)(hi - lo + 1));
  }
};

// w x h grid, vertex (x,y) = y*w+x, rotations clockwise [up,right,down,left].
// Each direction of each edge gets an independent weight in [wlo,whi].
EmbeddedGraph gen_grid(i32 w, i32 h, u64 seed = 0, i64 wlo = 1, i64 whi = 1);

// Wheel: rim 0..k-1, hub k, all weights 1. gen_wheel(6) is the 7-vertex
// hexagonal fixture used throughout the tests.
EmbeddedGraph gen_wheel(i32 k);

// Maximal planar graph grown by repeated random vertex insertion into faces,
// starting from a triangle. n >= 3.
EmbeddedGraph gen_random_triangulation(i32 n, u64 seed, i64 wlo = 1, i64 whi = 1);

}  // namespace pdo
