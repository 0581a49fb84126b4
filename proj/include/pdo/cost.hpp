#pragma once
#include <cstdint>
#include <limits>
#include <string>

namespace pdo {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i32 = std::int32_t;
using u32 = std::uint32_t;
using u16 = std::uint16_t;
using i128 = __int128;

constexpr i64 kInf = std::numeric_limits<i64>::max();

// Number of low-order key bits reserved for accumulated perturbation.
constexpr int kPertBits = 40;
// Per-edge words use fewer bits so the jitter total of any simple path stays
// below one base unit (room for 2^18 edges of 2^22 each).
constexpr int kPertWordBits = 22;
constexpr u64 kPertMask = (u64(1) << kPertWordBits) - 1;

// Deterministic per-edge perturbation words, splitmix64 over (seed, id).
struct Perturbation {
  u64 seed = 0;
  u64 word(u64 id) const {
    u64 z = seed + id * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return z & kPertMask;
  }
};

// Path cost. tier counts infinite edges, key is the perturbed total of the
// finite bases plus every perturbation word, base is the unperturbed length
// of the finite part. Order is lexicographic (tier, key); base rides along.
struct Cost {
  i64 tier = 0;
  i128 key = 0;
  i64 base = 0;

  static Cost zero() { return {}; }
  static Cost unreachable() {
    return {std::numeric_limits<i64>::max(), 0, 0};
  }
  bool is_unreachable() const { return tier == std::numeric_limits<i64>::max(); }
  bool finite() const { return tier == 0; }
  // Reported distance: finite value only when no infinite edge is used.
  i64 reported() const { return tier == 0 ? base : kInf; }

  friend Cost operator+(const Cost& a, const Cost& b) {
    if (a.is_unreachable() || b.is_unreachable()) return unreachable();
    return {a.tier + b.tier, a.key + b.key, a.base + b.base};
  }
  friend bool operator<(const Cost& a, const Cost& b) {
    if (a.tier != b.tier) return a.tier < b.tier;
    return a.key < b.key;
  }
  friend bool operator==(const Cost& a, const Cost& b) {
    return a.tier == b.tier && a.key == b.key;
  }
  friend bool operator!=(const Cost& a, const Cost& b) { return !(a == b); }
  friend bool operator<=(const Cost& a, const Cost& b) { return !(b < a); }
};

// One direction of an embedded edge as read from input.
struct Weight {
  i64 base = 0;
  bool infinite = false;
};

inline std::string weight_str(const Weight& w) {
  return w.infinite ? "inf" : std::to_string(w.base);
}

}  // namespace pdo
