#include "genlab/id_forests.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "genlab/errors.hpp"

namespace genlab {

std::size_t PlaneTree::size() const {
  std::size_t s = 1;
  for (const auto& c : children) s += c.size();
  return s;
}

nlohmann::json PlaneTree::to_json() const {
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& c : children) kids.push_back(c.to_json());
  return {{"label", label}, {"children", kids}};
}

UnrootedTree::UnrootedTree(std::vector<int> nodes, std::vector<std::pair<int, int>> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (nodes_.empty()) throw InvalidArgument("tree needs at least one node");
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
    throw InvalidArgument("tree labels must be distinct");
  if (edges_.size() + 1 != nodes_.size()) throw InvalidArgument("tree must have |V|-1 edges");
  for (auto& [a, b] : edges_)
    if (a > b) std::swap(a, b);
  std::sort(edges_.begin(), edges_.end());
  std::vector<int> parent(nodes_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto idx = [&](int x) {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
    if (it == nodes_.end() || *it != x) throw InvalidArgument("tree edge endpoint outside node set");
    return static_cast<int>(it - nodes_.begin());
  };
  for (auto [a, b] : edges_) {
    int ra = find(idx(a));
    int rb = find(idx(b));
    if (ra == rb) throw InvalidArgument("tree edges contain a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
  }
}

UnrootedTree UnrootedTree::single(int label) { return UnrootedTree({label}, {}); }

UnrootedTree UnrootedTree::from_plane(const PlaneTree& t) {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> edges;
  std::function<void(const PlaneTree&)> walk = [&](const PlaneTree& x) {
    nodes.push_back(x.label);
    for (const auto& c : x.children) {
      edges.emplace_back(x.label, c.label);
      walk(c);
    }
  };
  walk(t);
  return UnrootedTree(std::move(nodes), std::move(edges));
}

std::vector<int> UnrootedTree::neighbors(int x) const {
  std::vector<int> out;
  for (auto [a, b] : edges_) {
    if (a == x) out.push_back(b);
    if (b == x) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string UnrootedTree::key() const {
  std::string s = "[";
  if (edges_.empty()) {
    s += std::to_string(nodes_.front());
  } else {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
    }
  }
  return s + "]";
}

nlohmann::json UnrootedTree::to_json() const {
  nlohmann::json e = nlohmann::json::array();
  for (auto [a, b] : edges_) e.push_back({a, b});
  return {{"nodes", nodes_}, {"edges", e}};
}

std::string forest_key(const IDForest& f) {
  std::string s;
  for (const auto& t : f) s += t.key();
  return s;
}

nlohmann::json forest_to_json(const IDForest& f) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& t : f) a.push_back(t.to_json());
  return a;
}

IDForest forest_from_edges(const std::vector<int>& vertices, const std::vector<Edge>& edges) {
  SetPartition comps = components_partition(vertices, edges);
  std::vector<std::vector<std::pair<int, int>>> per(comps.num_blocks());
  for (const auto& e : edges) per[static_cast<std::size_t>(comps.block_of(e.odd))].emplace_back(e.odd, e.even);
  IDForest f;
  for (std::size_t b = 0; b < comps.num_blocks(); ++b) f.emplace_back(comps.blocks()[b], std::move(per[b]));
  return f;
}

SetPartition forest_support(const IDForest& f) {
  std::vector<std::vector<int>> blocks;
  for (const auto& t : f) blocks.push_back(t.nodes());
  return SetPartition(std::move(blocks));
}

namespace {

struct Rooted {
  const UnrootedTree& t;
  std::map<int, std::vector<int>> adj;

  explicit Rooted(const UnrootedTree& tree) : t(tree) {
    for (int x : t.nodes()) adj[x];
    for (auto [a, b] : t.edges()) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }

  // Returns false as soon as a violation is found; min/max over the subtree
  // (including x) are written back.
  bool check(int x, int parent, int& lo, int& hi) const {
    lo = hi = x;
    bool internal = false;
    int dlo = x;
    int dhi = x;
    bool first = true;
    for (int c : adj.at(x)) {
      if (c == parent) continue;
      internal = true;
      if ((c % 2) == (x % 2)) return false;
      int clo = 0;
      int chi = 0;
      if (!check(c, x, clo, chi)) return false;
      if (first) {
        dlo = clo;
        dhi = chi;
        first = false;
      } else {
        dlo = std::min(dlo, clo);
        dhi = std::max(dhi, chi);
      }
    }
    if (internal) {
      if (x % 2 == 1 && !(x < dlo)) return false;
      if (x % 2 == 0 && !(x > dhi)) return false;
      lo = std::min(x, dlo);
      hi = std::max(x, dhi);
    }
    return true;
  }

  PlaneTree plane(int x, int parent) const {
    PlaneTree p{x, {}};
    std::vector<int> kids;
    for (int c : adj.at(x))
      if (c != parent) kids.push_back(c);
    if (x % 2 == 0)
      std::sort(kids.begin(), kids.end());
    else
      std::sort(kids.begin(), kids.end(), std::greater<>());
    for (int c : kids) p.children.push_back(plane(c, x));
    return p;
  }
};

}  // namespace

bool is_id_rooted_at(const UnrootedTree& t, int root) {
  Rooted r(t);
  if (!r.adj.count(root)) throw InvalidArgument("root is not a node of the tree");
  int lo = 0;
  int hi = 0;
  return r.check(root, 0, lo, hi);
}

IdCheck id_check(const UnrootedTree& t) { return {is_id_rooted_at(t, t.max_node()), is_id_rooted_at(t, t.min_node())}; }

bool is_id_tree(const UnrootedTree& t) { return is_id_rooted_at(t, t.max_node()); }

namespace {

// Spanning trees of the Ferrers graph on `block`, passing the ID test.
void id_trees_by_filter(const std::vector<int>& block, const std::function<void(const UnrootedTree&)>& visit) {
  if (block.size() == 1) {
    visit(UnrootedTree::single(block.front()));
    return;
  }
  FerrersGraph g = FerrersGraph::build(block);
  const auto& es = g.edges();
  const std::size_t need = block.size() - 1;
  std::vector<int> comp(block.size());
  std::iota(comp.begin(), comp.end(), 0);
  auto idx = [&](int x) {
    return static_cast<std::size_t>(std::lower_bound(block.begin(), block.end(), x) - block.begin());
  };
  std::vector<std::pair<int, int>> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (chosen.size() == need) {
      UnrootedTree t(block, chosen);
      if (is_id_tree(t)) visit(t);
      return;
    }
    if (es.size() - pos < need - chosen.size()) return;
    const Edge& e = es[pos];
    int a = comp[idx(e.odd)];
    int b = comp[idx(e.even)];
    if (a != b) {
      std::vector<int> saved = comp;
      for (auto& c : comp)
        if (c == b) c = a;
      chosen.emplace_back(e.odd, e.even);
      rec(pos + 1);
      chosen.pop_back();
      comp = std::move(saved);
    }
    rec(pos + 1);
  };
  rec(0);
}

void forests_by_filter(const std::vector<int>& vertices, std::optional<std::size_t> k,
                       const std::function<void(const IDForest&)>& visit) {
  std::map<std::vector<int>, std::vector<UnrootedTree>> cache;
  auto trees_on = [&](const std::vector<int>& b) -> const std::vector<UnrootedTree>& {
    auto it = cache.find(b);
    if (it != cache.end()) return it->second;
    std::vector<UnrootedTree> ts;
    id_trees_by_filter(b, [&](const UnrootedTree& t) { ts.push_back(t); });
    return cache.emplace(b, std::move(ts)).first->second;
  };
  for_each_set_partition(vertices, [&](const SetPartition& p) {
    if (k && p.num_blocks() != *k) return;
    std::vector<const std::vector<UnrootedTree>*> choices;
    for (const auto& b : p.blocks()) {
      const auto& ts = trees_on(b);
      if (ts.empty()) return;
      choices.push_back(&ts);
    }
    IDForest f(choices.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == choices.size()) {
        visit(f);
        return;
      }
      for (const auto& t : *choices[i]) {
        f[i] = t;
        rec(i + 1);
      }
    };
    rec(0);
  });
}

}  // namespace

void for_each_id_forest(const std::vector<int>& vertices, std::optional<std::size_t> k,
                        const std::function<void(const IDForest&)>& visit, IdForestMethod method) {
  if (vertices.size() > kMaxIdForestVertices)
    throw SizeLimit("ID forest enumeration is capped at " + std::to_string(kMaxIdForestVertices) + " vertices");
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  if (vs.empty()) {
    if (!k || *k == 0) visit({});
    return;
  }
  if (method == IdForestMethod::Auto)
    method = vs.size() <= 8 ? IdForestMethod::SpanningTreeFilter : IdForestMethod::Nbc;
  if (method == IdForestMethod::SpanningTreeFilter) {
    forests_by_filter(vs, k, visit);
    return;
  }
  FerrersGraph g = FerrersGraph::build(vs);
  for_each_nbc_set(g, [&](const std::vector<Edge>& s) {
    if (k && vs.size() - s.size() != *k) return;
    visit(forest_from_edges(vs, s));
  });
}

std::vector<IDForest> id_forests(const std::vector<int>& vertices, std::optional<std::size_t> k,
                                 IdForestMethod method) {
  std::vector<IDForest> out;
  for_each_id_forest(vertices, k, [&](const IDForest& f) { out.push_back(f); }, method);
  return out;
}

std::vector<UnrootedTree> id_trees(const std::vector<int>& vertices, IdForestMethod method) {
  std::vector<UnrootedTree> out;
  for_each_id_forest(vertices, 1, [&](const IDForest& f) { out.push_back(f.front()); }, method);
  return out;
}

PlaneTree hat_form(const UnrootedTree& t) {
  if (!is_id_tree(t)) throw NotIDTree("not an ID tree: " + t.key());
  return Rooted(t).plane(t.max_node(), 0);
}

PlaneTree tilde_form(const UnrootedTree& t) {
  if (!is_id_tree(t)) throw NotIDTree("not an ID tree: " + t.key());
  return Rooted(t).plane(t.min_node(), 0);
}

std::vector<int> postorder(const PlaneTree& t) {
  std::vector<int> w;
  std::function<void(const PlaneTree&)> walk = [&](const PlaneTree& x) {
    for (const auto& c : x.children) walk(c);
    w.push_back(x.label);
  };
  walk(t);
  return w;
}

bool is_w_word(const std::vector<int>& w) {
  if (w.empty()) return false;
  std::vector<int> s = w;
  std::sort(s.begin(), s.end());
  if (s.front() <= 0 || std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] % 2 == 1 && !(w[i] < w[i + 1])) return false;
    if (w[i] % 2 == 0 && !(w[i] > w[i + 1])) return false;
  }
  int last = w.back();
  if (last % 2 == 1 && last != s.front()) return false;
  if (last % 2 == 0 && last != s.back()) return false;
  return true;
}

std::vector<std::vector<int>> gamma_segments(const std::vector<int>& w) {
  if (!is_w_word(w)) throw NotWWord("not a W-word: " + word_to_string(w));
  std::vector<std::vector<int>> segs;
  if (w.size() == 1) return segs;
  const bool even_root = w.back() % 2 == 0;
  // Mark right-to-left minima (even root) or maxima (odd root) of w' = w minus last.
  const std::size_t m = w.size() - 1;
  std::vector<char> cut(m, 0);
  int best = w[m - 1];
  cut[m - 1] = 1;
  for (std::size_t i = m - 1; i-- > 0;) {
    if (even_root ? w[i] < best : w[i] > best) {
      best = w[i];
      cut[i] = 1;
    }
  }
  std::vector<int> cur;
  for (std::size_t i = 0; i < m; ++i) {
    cur.push_back(w[i]);
    if (cut[i]) {
      segs.push_back(std::move(cur));
      cur.clear();
    }
  }
  return segs;
}

PlaneTree gamma(const std::vector<int>& w) {
  PlaneTree t{0, {}};
  t.label = w.empty() ? 0 : w.back();
  for (const auto& seg : gamma_segments(w)) t.children.push_back(gamma(seg));
  return t;
}

Permutation psi(const UnrootedTree& t) { return Permutation::from_cycles({postorder(hat_form(t))}); }

Permutation psi_tilde(const UnrootedTree& t) { return Permutation::from_cycles({postorder(tilde_form(t))}); }

Permutation psi_forest(const IDForest& f) {
  std::vector<Cycle> cs;
  for (const auto& t : f) cs.push_back(postorder(hat_form(t)));
  return Permutation::from_cycles(cs);
}

std::string word_to_string(const std::vector<int>& w) {
  bool wide = std::any_of(w.begin(), w.end(), [](int x) { return x > 9; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace genlab
