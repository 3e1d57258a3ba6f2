#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linorbit/bigint.hpp"

namespace linorbit {

// Endpoint pair. Unordered in a UGraph, (tail, head) in a DiGraph.
// Vertices are 0-based in memory; the wire formats are 1-based.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct UGraph {
  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
  // Empty for unweighted problems, one entry per edge otherwise.
  std::vector<BigInt> weights;

  std::size_t num_edges() const { return edges.size(); }
  bool weighted() const { return !weights.empty(); }

  friend bool operator==(const UGraph&, const UGraph&) = default;
};

struct DiGraph {
  std::size_t num_vertices = 0;
  std::vector<Edge> arcs;

  std::size_t num_arcs() const { return arcs.size(); }

  friend bool operator==(const DiGraph&, const DiGraph&) = default;
};

// Throws InvalidInstance: self-loop, duplicate edge, index out of range, or
// weights present/absent against `need_weights`; negative weights rejected.
void check_graph(const UGraph& g, bool need_weights);

// Throws InvalidInstance: self-loop, duplicate arc or index out of range.
void check_digraph(const DiGraph& g);

// Dense symmetric adjacency, row-major N x N. Intended for desk-scale graphs.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const UGraph& g);
  AdjacencyMatrix(std::size_t n, bool full);

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool on);

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

// Complement on the same vertex set; edges listed as (i, j), i < j, in
// lexicographic order.
UGraph complement(const UGraph& g);

// Number of edges of the complement without materialising it.
std::size_t complement_edge_count(const UGraph& g);

// Kahn's algorithm over the arcs whose `keep_arc` flag is set and whose
// endpoints both have `keep_vertex` set. Empty masks mean "keep all".
bool is_acyclic(const DiGraph& g, const std::vector<bool>& keep_vertex,
                const std::vector<bool>& keep_arc);

// Directed line graph: one node per arc, an arc a -> b whenever head(a) == tail(b).
// Arcs enumerated by a, then by b in arc-list order.
DiGraph line_graph(const DiGraph& g);

}  // namespace linorbit
