#include "pdo/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace pdo {

void write_graph(std::ostream& os, const EmbeddedGraph& g) {
  os << "pdo-graph 1\n";
  os << g.n << ' ' << g.m() << '\n';
  if (g.grid_w > 0) os << "grid " << g.grid_w << ' ' << g.grid_h << '\n';
  for (const EdgeRec& e : g.edges)
    os << e.a << ' ' << e.b << ' ' << weight_str(e.wab) << ' ' << weight_str(e.wba)
       << '\n';
  for (i32 v = 0; v < g.n; v++) {
    os << g.rot[v].size();
    for (i32 d : g.rot[v]) os << ' ' << d;
    os << '\n';
  }
}

static Weight parse_weight(const std::string& tok) {
  if (tok == "inf") return {0, true};
  size_t pos = 0;
  i64 v = std::stoll(tok, &pos);
  if (pos != tok.size()) throw std::runtime_error("bad weight token: " + tok);
  if (v < 0) throw std::runtime_error("negative weight");
  return {v, false};
}

EmbeddedGraph read_graph(std::istream& is) {
  std::string magic;
  int version = 0;
  is >> magic >> version;
  if (magic != "pdo-graph" || version != 1)
    throw std::runtime_error("not a pdo-graph file");
  EmbeddedGraph g;
  i64 n = 0, m = 0;
  is >> n >> m;
  if (!is || n < 0 || m < 0) throw std::runtime_error("bad graph header");
  g.n = (i32)n;
  g.rot.resize(g.n);
  std::string tok;
  is >> tok;
  if (tok == "grid") {
    is >> g.grid_w >> g.grid_h;
    is >> tok;
  }
  // tok now holds the first tail token of the edge list.
  for (i64 e = 0; e < m; e++) {
    if (e > 0) is >> tok;
    i32 a = (i32)std::stoll(tok);
    i32 b;
    std::string wa, wb;
    is >> b >> wa >> wb;
    if (!is) throw std::runtime_error("truncated edge list");
    if (a < 0 || a >= g.n || b < 0 || b >= g.n)
      throw std::runtime_error("edge endpoint out of range");
    g.add_edge(a, b, parse_weight(wa), parse_weight(wb));
  }
  for (i32 v = 0; v < g.n; v++) {
    i64 deg;
    is >> deg;
    if (!is || deg < 0) throw std::runtime_error("truncated rotation list");
    for (i64 i = 0; i < deg; i++) {
      i64 d;
      is >> d;
      if (!is) throw std::runtime_error("truncated rotation list");
      g.rot[v].push_back((i32)d);
    }
  }
  g.finalize();
  return g;
}

void save_graph(const std::string& path, const EmbeddedGraph& g) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  write_graph(f, g);
}

EmbeddedGraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  return read_graph(f);
}

}  // namespace pdo
