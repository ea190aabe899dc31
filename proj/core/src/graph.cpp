#include "vtwin/graph.hpp"

#include <algorithm>
#include <functional>

#include "vtwin/error.hpp"

namespace vtwin {

namespace {

std::string dot_name(LambdaGen g) {
  return "l_" + std::to_string(g.i) + "_" + std::to_string(g.j);
}

VertexSet to_set(const DefGraph &g, const std::vector<int> &indices) {
  VertexSet out;
  for (int v : indices)
    out.push_back(g.vertex(v));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

DefGraph::DefGraph(int n) : n_(n) {
  if (n < 2)
    throw Error(Errc::invalid_strand_count,
                "strand count must be at least 2, got " + std::to_string(n));
  vertices_ = generators(n);
  const int count = vertex_count();
  adjacency_.assign(static_cast<std::size_t>(count), {});
  matrix_.assign(static_cast<std::size_t>(count * count), 0);
  for (int u = 0; u < count; ++u)
    for (int v = 0; v < count; ++v)
      if (u != v && commute(vertices_[u], vertices_[v])) {
        adjacency_[u].push_back(v);
        matrix_[static_cast<std::size_t>(u * count + v)] = 1;
      }
}

bool DefGraph::adjacent(int u, int v) const {
  return matrix_[static_cast<std::size_t>(u * vertex_count() + v)] != 0;
}

std::size_t DefGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto &row : adjacency_)
    twice += row.size();
  return twice / 2;
}

std::string DefGraph::to_dot() const {
  std::string out = "graph PVT_" + std::to_string(n_) + " {\n";
  for (LambdaGen g : vertices_)
    out += "  " + dot_name(g) + ";\n";
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adjacency_[u])
      if (u < v)
        out += "  " + dot_name(vertices_[u]) + " -- " + dot_name(vertices_[v]) + ";\n";
  out += "}\n";
  return out;
}

DefGraph defining_graph(int n) { return DefGraph(n); }

VertexSet link(int n, LambdaGen v) {
  const DefGraph g(n);
  return to_set(g, g.adjacency()[generator_index(n, v)]);
}

VertexSet star(int n, LambdaGen v) {
  VertexSet out = link(n, v);
  out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet non_neighbors(int n, LambdaGen v) {
  const VertexSet st = star(n, v);
  VertexSet out;
  for (LambdaGen g : generators(n))
    if (!std::binary_search(st.begin(), st.end(), g))
      out.push_back(g);
  return out;
}

bool dominates(int n, LambdaGen v, LambdaGen w) {
  if (v == w)
    throw Error(Errc::invalid_input, "domination needs distinct vertices");
  const VertexSet lk = link(n, v);
  const VertexSet st = star(n, w);
  return std::includes(st.begin(), st.end(), lk.begin(), lk.end());
}

std::vector<VertexSet> components_minus_star(int n, LambdaGen v) {
  const DefGraph g(n);
  const VertexSet st = star(n, v);
  std::vector<char> inside(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int u = 0; u < g.vertex_count(); ++u)
    inside[u] = !std::binary_search(st.begin(), st.end(), g.vertex(u));

  std::vector<VertexSet> components;
  std::vector<char> seen(inside.size(), 0);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (!inside[start] || seen[start])
      continue;
    std::vector<int> members{start};
    seen[start] = 1;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int nb : g.adjacency()[members[k]])
        if (inside[nb] && !seen[nb]) {
          seen[nb] = 1;
          members.push_back(nb);
        }
    components.push_back(to_set(g, members));
  }
  return components;
}

std::size_t complement_component_count(int n) {
  const DefGraph g(n);
  const int count = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  std::size_t components = 0;
  for (int start = 0; start < count; ++start) {
    if (seen[start])
      continue;
    ++components;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < count; ++v)
        if (v != u && !g.adjacent(u, v) && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return components;
}

std::vector<int> maximum_cardinality_search(const AdjacencyList &graph) {
  const std::size_t count = graph.size();
  std::vector<int> weight(count, 0);
  std::vector<char> numbered(count, 0);
  std::vector<int> order;
  order.reserve(count);
  for (std::size_t step = 0; step < count; ++step) {
    int best = -1;
    for (std::size_t v = 0; v < count; ++v)
      if (!numbered[v] && (best < 0 || weight[v] > weight[best]))
        best = static_cast<int>(v);
    numbered[best] = 1;
    order.push_back(best);
    for (int nb : graph[best])
      if (!numbered[nb])
        ++weight[nb];
  }
  return order;
}

bool is_perfect_elimination_order(const AdjacencyList &graph,
                                  const std::vector<int> &order) {
  std::vector<int> position(graph.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k)
    position[order[k]] = static_cast<int>(k);
  auto adjacent = [&](int a, int b) {
    return std::find(graph[a].begin(), graph[a].end(), b) != graph[a].end();
  };
  for (int v : order) {
    std::vector<int> earlier;
    for (int nb : graph[v])
      if (position[nb] < position[v])
        earlier.push_back(nb);
    for (std::size_t a = 0; a < earlier.size(); ++a)
      for (std::size_t b = a + 1; b < earlier.size(); ++b)
        if (!adjacent(earlier[a], earlier[b]))
          return false;
  }
  return true;
}

bool is_chordal(const AdjacencyList &graph) {
  return is_perfect_elimination_order(graph, maximum_cardinality_search(graph));
}

bool is_chordal(int n) { return is_chordal(DefGraph(n).adjacency()); }

std::vector<std::vector<int>> graph_automorphisms(int n, const Limits &limits) {
  if (n > limits.max_automorphism_strands)
    throw Error(Errc::resource_limit,
                "automorphism enumeration limited to n <= " +
                    std::to_string(limits.max_automorphism_strands));
  const DefGraph g(n);
  const int count = g.vertex_count();

  // Neighbourhood signature: own degree followed by sorted neighbour degrees.
  std::vector<std::vector<int>> signature(static_cast<std::size_t>(count));
  for (int v = 0; v < count; ++v) {
    auto &sig = signature[v];
    for (int nb : g.adjacency()[v])
      sig.push_back(g.degree(nb));
    std::sort(sig.begin(), sig.end());
    sig.insert(sig.begin(), g.degree(v));
  }

  std::vector<std::vector<int>> result;
  std::vector<int> image(static_cast<std::size_t>(count), -1);
  std::vector<char> used(static_cast<std::size_t>(count), 0);

  std::function<void(int)> extend = [&](int v) {
    if (v == count) {
      result.push_back(image);
      return;
    }
    for (int candidate = 0; candidate < count; ++candidate) {
      if (used[candidate] || signature[candidate] != signature[v])
        continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u)
        consistent = g.adjacent(u, v) == g.adjacent(image[u], candidate);
      if (!consistent)
        continue;
      image[v] = candidate;
      used[candidate] = 1;
      extend(v + 1);
      used[candidate] = 0;
      image[v] = -1;
    }
  };
  extend(0);
  return result;
}

} // namespace vtwin
