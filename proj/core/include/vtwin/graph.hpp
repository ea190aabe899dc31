#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vtwin/config.hpp"
#include "vtwin/raag.hpp"

namespace vtwin {

using AdjacencyList = std::vector<std::vector<int>>;
using VertexSet = std::vector<LambdaGen>;

// Defining graph of PVT_n: one vertex per lambda_{i,j} (indexed as in
// generator_index), an edge when the two index pairs are disjoint.
class DefGraph {
public:
  explicit DefGraph(int n);

  int strands() const { return n_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  LambdaGen vertex(int v) const { return vertices_[v]; }
  const std::vector<LambdaGen> &vertices() const { return vertices_; }
  const AdjacencyList &adjacency() const { return adjacency_; }
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  std::size_t edge_count() const;

  std::string to_dot() const;

private:
  int n_;
  std::vector<LambdaGen> vertices_;
  AdjacencyList adjacency_;
  std::vector<char> matrix_;
};

DefGraph defining_graph(int n);

VertexSet link(int n, LambdaGen v);
VertexSet star(int n, LambdaGen v);
VertexSet non_neighbors(int n, LambdaGen v);

// v <= w, i.e. lk(v) is contained in st(w). Throws for v == w.
bool dominates(int n, LambdaGen v, LambdaGen w);

// Connected components of the subgraph induced on the complement of st(v),
// each sorted, ordered by their least vertex.
std::vector<VertexSet> components_minus_star(int n, LambdaGen v);

// Connected components of the complement graph (irreducibility witness).
std::size_t complement_component_count(int n);

// Maximum cardinality search; returns vertices in visiting order.
std::vector<int> maximum_cardinality_search(const AdjacencyList &graph);

// True if `order` is a perfect elimination ordering when read backwards,
// i.e. the earlier-visited neighbours of each vertex form a clique.
bool is_perfect_elimination_order(const AdjacencyList &graph,
                                  const std::vector<int> &order);

bool is_chordal(const AdjacencyList &graph);
bool is_chordal(int n);

// Vertex permutations preserving adjacency, each given as the image index of
// every vertex. Throws resource_limit above limits.max_automorphism_strands.
std::vector<std::vector<int>>
graph_automorphisms(int n, const Limits &limits = kDefaultLimits);

} // namespace vtwin
