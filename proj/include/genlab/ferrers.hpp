#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "genlab/polynomial.hpp"
#include "genlab/set_partition.hpp"

namespace genlab {

/// An edge {odd, even} of a Ferrers graph, always with odd < even.
struct Edge {
  int odd = 0;
  int even = 0;
  auto operator<=>(const Edge&) const = default;
};

/// The fixed total order on edges: odd endpoint ascending, then even
/// endpoint descending. This is one linear extension of the product order
/// used by the ID-forest/NBC correspondence; the choice is deterministic.
bool edge_precedes(const Edge& a, const Edge& b);

/// The bipartite graph on V joining each odd u to every even v > u.
class FerrersGraph {
 public:
  /// Throws InvalidArgument for an empty or non-positive vertex set.
  static FerrersGraph build(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  /// Edges listed in edge_precedes order.
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  std::size_t num_components() const;

  /// {"vertices":[...],"edges":[[u,v],...],"edge_order":"odd-asc,even-desc"}
  nlohmann::json to_json() const;

 private:
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
};

/// Undirected multigraph on vertices 0..n-1 (n <= 64). Parallel edges are
/// collapsed; a loop makes the chromatic polynomial zero.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Chromatic polynomial by deletion-contraction.
Polynomial chromatic_polynomial(const SimpleGraph& g);
Polynomial chromatic_polynomial(const FerrersGraph& g);

SimpleGraph to_simple_graph(const FerrersGraph& g);

/// Visit every edge set of g containing no broken circuit with respect to
/// edge_precedes. Each set is passed in edge order.
void for_each_nbc_set(const FerrersGraph& g, const std::function<void(const std::vector<Edge>&)>& visit);
std::vector<std::vector<Edge>> nbc_sets(const FerrersGraph& g);

/// Partition of the vertex set into connected components of (V, edges).
SetPartition components_partition(const std::vector<int>& vertices, const std::vector<Edge>& edges);

struct NbcIdReport {
  bool equal = false;
  std::size_t nbc_count = 0;
  std::size_t id_count = 0;
  /// Canonical forest strings found on one side only.
  std::vector<std::string> only_nbc;
  std::vector<std::string> only_id;
};

/// Compare the NBC forests of g with the ID forests on its vertex set.
NbcIdReport nbc_equals_id(const FerrersGraph& g);

}  // namespace genlab
