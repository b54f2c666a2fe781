#include "genlab/ferrers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "genlab/errors.hpp"
#include "genlab/id_forests.hpp"

namespace genlab {

bool edge_precedes(const Edge& a, const Edge& b) {
  if (a.odd != b.odd) return a.odd < b.odd;
  return a.even > b.even;
}

FerrersGraph FerrersGraph::build(std::vector<int> vertices) {
  if (vertices.empty()) throw InvalidArgument("Ferrers graph needs a nonempty vertex set");
  std::sort(vertices.begin(), vertices.end());
  if (vertices.front() <= 0) throw InvalidArgument("Ferrers graph vertices must be positive");
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InvalidArgument("Ferrers graph vertices must be distinct");
  FerrersGraph g;
  g.vertices_ = std::move(vertices);
  for (int u : g.vertices_) {
    if (u % 2 == 0) continue;
    for (int v : g.vertices_)
      if (v > u && v % 2 == 0) g.edges_.push_back({u, v});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), edge_precedes);
  return g;
}

bool FerrersGraph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u % 2 == 0 || v % 2 != 0) return false;
  return std::binary_search(vertices_.begin(), vertices_.end(), u) &&
         std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t FerrersGraph::num_components() const { return components_partition(vertices_, edges_).num_blocks(); }

nlohmann::json FerrersGraph::to_json() const {
  nlohmann::json e = nlohmann::json::array();
  for (const auto& ed : edges_) e.push_back({ed.odd, ed.even});
  return {{"vertices", vertices_}, {"edges", e}, {"edge_order", "odd-asc,even-desc"}};
}

SimpleGraph to_simple_graph(const FerrersGraph& g) {
  SimpleGraph s;
  s.n = static_cast<int>(g.vertices().size());
  const auto& vs = g.vertices();
  auto idx = [&](int x) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin()); };
  for (const auto& e : g.edges()) s.edges.emplace_back(idx(e.odd), idx(e.even));
  return s;
}

namespace {

using Adj = std::vector<std::uint64_t>;

struct ChromaticSolver {
  std::map<std::pair<Adj, std::uint64_t>, Polynomial> memo;

  Polynomial solve(Adj adj, std::uint64_t active) {
    // Strip isolated vertices and leaves first: isolated -> factor t,
    // leaf -> factor (t - 1).
    Polynomial factor = Polynomial::constant(1);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < 64; ++v) {
        if (!((active >> v) & 1u)) continue;
        int deg = __builtin_popcountll(adj[static_cast<std::size_t>(v)]);
        if (deg == 0) {
          factor *= Polynomial::t();
          active &= ~(std::uint64_t{1} << v);
          changed = true;
        } else if (deg == 1) {
          int w = __builtin_ctzll(adj[static_cast<std::size_t>(v)]);
          adj[static_cast<std::size_t>(w)] &= ~(std::uint64_t{1} << v);
          adj[static_cast<std::size_t>(v)] = 0;
          active &= ~(std::uint64_t{1} << v);
          factor *= Polynomial({-1, 1});
          changed = true;
        }
      }
    }
    if (active == 0) return factor;
    auto key = std::make_pair(adj, active);
    if (auto it = memo.find(key); it != memo.end()) return factor * it->second;

    int u = __builtin_ctzll(active);
    int v = __builtin_ctzll(adj[static_cast<std::size_t>(u)]);
    auto bu = std::uint64_t{1} << u;
    auto bv = std::uint64_t{1} << v;

    Adj del = adj;
    del[static_cast<std::size_t>(u)] &= ~bv;
    del[static_cast<std::size_t>(v)] &= ~bu;

    // Contract v into u; parallel edges merge through the OR.
    Adj con = del;
    con[static_cast<std::size_t>(u)] |= con[static_cast<std::size_t>(v)];
    for (int w = 0; w < 64; ++w) {
      auto& row = con[static_cast<std::size_t>(w)];
      if ((row >> v) & 1u) {
        row &= ~bv;
        if (w != u) row |= bu;
      }
    }
    con[static_cast<std::size_t>(v)] = 0;
    con[static_cast<std::size_t>(u)] &= ~bu;

    Polynomial r = solve(std::move(del), active) - solve(std::move(con), active & ~bv);
    memo.emplace(std::move(key), r);
    return factor * r;
  }
};

}  // namespace

Polynomial chromatic_polynomial(const SimpleGraph& g) {
  if (g.n < 0 || g.n > 64) throw SizeLimit("chromatic_polynomial supports at most 64 vertices");
  Adj adj(64, 0);
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.n || b >= g.n) throw InvalidArgument("edge endpoint out of range");
    if (a == b) return Polynomial();  // a loop admits no proper coloring
    adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  }
  std::uint64_t active = g.n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
  ChromaticSolver solver;
  return solver.solve(std::move(adj), active);
}

Polynomial chromatic_polynomial(const FerrersGraph& g) { return chromatic_polynomial(to_simple_graph(g)); }

namespace {

struct NbcSearch {
  const FerrersGraph& g;
  const std::function<void(const std::vector<Edge>&)>& visit;
  std::vector<int> comp;  // component label per vertex index
  std::vector<Edge> chosen;

  int idx(int x) const {
    const auto& vs = g.vertices();
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
  }

  // Edges are decided from the largest (in edge order) down. When an edge's
  // endpoints are already joined by larger chosen edges, every completion
  // either closes a cycle or keeps a broken circuit, so the branch dies.
  void run(int pos) {
    if (pos < 0) {
      std::vector<Edge> out(chosen.rbegin(), chosen.rend());
      visit(out);
      return;
    }
    const Edge& e = g.edges()[static_cast<std::size_t>(pos)];
    int a = comp[static_cast<std::size_t>(idx(e.odd))];
    int b = comp[static_cast<std::size_t>(idx(e.even))];
    if (a == b) return;
    run(pos - 1);
    std::vector<int> saved = comp;
    for (auto& c : comp)
      if (c == b) c = a;
    chosen.push_back(e);
    run(pos - 1);
    chosen.pop_back();
    comp = std::move(saved);
  }
};

}  // namespace

void for_each_nbc_set(const FerrersGraph& g, const std::function<void(const std::vector<Edge>&)>& visit) {
  NbcSearch s{g, visit, {}, {}};
  s.comp.resize(g.vertices().size());
  for (std::size_t i = 0; i < s.comp.size(); ++i) s.comp[i] = static_cast<int>(i);
  s.run(static_cast<int>(g.edges().size()) - 1);
}

std::vector<std::vector<Edge>> nbc_sets(const FerrersGraph& g) {
  std::vector<std::vector<Edge>> out;
  for_each_nbc_set(g, [&](const std::vector<Edge>& s) { out.push_back(s); });
  return out;
}

SetPartition components_partition(const std::vector<int>& vertices, const std::vector<Edge>& edges) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  std::vector<int> parent(vs.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto idx = [&](int x) {
    auto it = std::lower_bound(vs.begin(), vs.end(), x);
    if (it == vs.end() || *it != x) throw InvalidArgument("edge endpoint outside vertex set");
    return static_cast<int>(it - vs.begin());
  };
  for (const auto& e : edges) parent[static_cast<std::size_t>(find(idx(e.odd)))] = find(idx(e.even));
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < vs.size(); ++i) groups[find(static_cast<int>(i))].push_back(vs[i]);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, b] : groups) blocks.push_back(std::move(b));
  return SetPartition(std::move(blocks));
}

NbcIdReport nbc_equals_id(const FerrersGraph& g) {
  std::set<std::string> nbc;
  for_each_nbc_set(g, [&](const std::vector<Edge>& s) {
    nbc.insert(forest_key(forest_from_edges(g.vertices(), s)));
  });
  std::set<std::string> id;
  for_each_id_forest(g.vertices(), std::nullopt, [&](const IDForest& f) { id.insert(forest_key(f)); },
                     IdForestMethod::SpanningTreeFilter);
  NbcIdReport r;
  r.nbc_count = nbc.size();
  r.id_count = id.size();
  std::set_difference(nbc.begin(), nbc.end(), id.begin(), id.end(), std::back_inserter(r.only_nbc));
  std::set_difference(id.begin(), id.end(), nbc.begin(), nbc.end(), std::back_inserter(r.only_id));
  r.equal = r.only_nbc.empty() && r.only_id.empty();
  return r;
}

}  // namespace genlab
