#pragma once
#include <deque>
#include <unordered_map>
#include <vector>

#include "pdo/decomposition.hpp"
#include "pdo/point_location.hpp"
#include "pdo/r_division.hpp"

namespace pdo {

// Stored words per table family; a word is 8 bytes of payload.
struct SpaceCounters {
  i64 division = 0;
  i64 boundary_tables = 0;
  i64 region_tables = 0;
  i64 decomp_trees = 0;
  i64 locators = 0;
  i64 total() const {
    return division + boundary_tables + region_tables + decomp_trees +
           locators;
  }
};

struct OracleOptions {
  i32 threads = 0;         // 0: ORACLE_THREADS env var, else 1
  bool space_only = false; // accounting run: build, count, discard
  u64 pert_seed = 1;
  DividerOptions divider{};
};

// One (region, hole) pair: the normalized host, its point-location
// structures, and the hole sites as global boundary indices.
struct HoleCtx {
  RegionHost host;
  i32 region = -1, hole = -1;
  std::vector<EdgeLocator> locs;      // per ordered non-filler host edge
  std::vector<i32> loc_of_dart;       // host dart -> index into locs, -1
  std::vector<i32> site_bidx;         // hole position -> boundary index
  bool direct = false;                // < 3 sites: enumerate, no machinery
};

struct DistanceOracle {
  EmbeddedGraph g;
  Perturbation pert;
  RDivision div;
  bool space_only = false;

  std::vector<i32> home_region;  // internal vertex -> region, -1 boundary
  // distance tables indexed [boundary index][vertex]
  std::vector<std::vector<i64>> from_b;    // d(b -> v), kInf unreachable
  std::vector<std::vector<i64>> to_b;      // d(v -> b)
  std::vector<std::vector<i128>> to_b_key; // perturbed keys for site weights

  std::vector<std::vector<i32>> internals;  // region -> internal globals
  std::vector<std::unordered_map<i32, i32>> local_of;  // global -> host local
  std::vector<std::vector<i64>> pair_table; // region -> row-major internal^2

  std::deque<HoleCtx> ctxs;                  // stable addresses
  std::vector<std::vector<i32>> region_ctxs; // region -> ctx ids
  std::vector<std::vector<DecompTree>> trees;  // [ctx][u], empty if unused

  SpaceCounters space;
  mutable i64 box_calls = 0;  // cumulative box_query invocations
  mutable i64 locate_calls = 0;
  i64 vor_retries = 0, vor_fallbacks = 0;
};

DistanceOracle preprocess(const EmbeddedGraph& g, i32 r,
                          const OracleOptions& opt = {});

// Walks the stored decomposition of (u, ctx); returns candidate hole
// positions (at most 6 when the tree exists, all sites otherwise).
std::vector<i32> locate_candidate_sites(const DistanceOracle& o, i32 u,
                                        i32 ctx_id, i32 v_local);

// Exact base distance, kInf when unreachable.
i64 query(const DistanceOracle& o, i32 u, i32 v);

}  // namespace pdo
