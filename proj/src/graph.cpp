#include "linorbit/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "linorbit/errors.hpp"

namespace linorbit {
namespace {

void check_endpoints(const Edge& e, std::size_t n, const char* what) {
  if (e.u >= n || e.v >= n) {
    throw InvalidInstance(std::string(what) + " endpoint out of range");
  }
  if (e.u == e.v) throw InvalidInstance(std::string(what) + " is a self-loop");
}

}  // namespace

void check_graph(const UGraph& g, bool need_weights) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : g.edges) {
    check_endpoints(e, g.num_vertices, "edge");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InvalidInstance("duplicate edge");
    }
  }
  if (need_weights) {
    if (g.weights.size() != g.edges.size()) {
      throw InvalidInstance("expected one weight per edge");
    }
    for (const BigInt& w : g.weights) {
      if (w < 0) throw InvalidInstance("negative edge weight");
    }
  } else if (!g.weights.empty()) {
    throw InvalidInstance("weights given for an unweighted problem");
  }
}

void check_digraph(const DiGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& a : g.arcs) {
    check_endpoints(a, g.num_vertices, "arc");
    if (!seen.emplace(a.u, a.v).second) throw InvalidInstance("duplicate arc");
  }
}

AdjacencyMatrix::AdjacencyMatrix(std::size_t n, bool full)
    : n_(n), bits_(n * n, full ? 1 : 0) {
  for (std::size_t i = 0; i < n; ++i) bits_[i * n + i] = 0;
}

AdjacencyMatrix::AdjacencyMatrix(const UGraph& g) : AdjacencyMatrix(g.num_vertices, false) {
  for (const Edge& e : g.edges) set(e.u, e.v, true);
}

void AdjacencyMatrix::set(std::size_t i, std::size_t j, bool on) {
  bits_[i * n_ + j] = on ? 1 : 0;
  bits_[j * n_ + i] = on ? 1 : 0;
}

UGraph complement(const UGraph& g) {
  AdjacencyMatrix adj(g);
  UGraph out;
  out.num_vertices = g.num_vertices;
  for (std::size_t i = 0; i < g.num_vertices; ++i) {
    for (std::size_t j = i + 1; j < g.num_vertices; ++j) {
      if (!adj(i, j)) out.edges.push_back({i, j});
    }
  }
  return out;
}

std::size_t complement_edge_count(const UGraph& g) {
  const std::size_t n = g.num_vertices;
  return n * (n - (n > 0 ? 1 : 0)) / 2 - g.edges.size();
}

bool is_acyclic(const DiGraph& g, const std::vector<bool>& keep_vertex,
                const std::vector<bool>& keep_arc) {
  const std::size_t n = g.num_vertices;
  auto vertex_on = [&](std::size_t v) { return keep_vertex.empty() || keep_vertex[v]; };
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    if (!keep_arc.empty() && !keep_arc[a]) continue;
    const Edge& arc = g.arcs[a];
    if (!vertex_on(arc.u) || !vertex_on(arc.v)) continue;
    out[arc.u].push_back(arc.v);
    ++indeg[arc.v];
  }
  std::vector<std::size_t> queue;
  std::size_t live = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!vertex_on(v)) continue;
    ++live;
    if (indeg[v] == 0) queue.push_back(v);
  }
  std::size_t removed = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.back();
    queue.pop_back();
    ++removed;
    for (std::size_t w : out[v]) {
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  return removed == live;
}

DiGraph line_graph(const DiGraph& g) {
  std::vector<std::vector<std::size_t>> out_arcs(g.num_vertices);
  for (std::size_t a = 0; a < g.arcs.size(); ++a) out_arcs[g.arcs[a].u].push_back(a);
  DiGraph lg;
  lg.num_vertices = g.arcs.size();
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    for (std::size_t b : out_arcs[g.arcs[a].v]) lg.arcs.push_back({a, b});
  }
  return lg;
}

}  // namespace linorbit
