#pragma once
// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<int> range(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

// images[i] = sigma(ground[i]) for every permutation of ground.
inline void each_permutation(const std::vector<int>& ground,
                             const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> img = ground;
  std::sort(img.begin(), img.end());
  do visit(img);
  while (std::next_permutation(img.begin(), img.end()));
}

inline int num_cycles(const std::vector<int>& ground, const std::vector<int>& img) {
  std::map<int, int> s;
  for (std::size_t i = 0; i < ground.size(); ++i) s[ground[i]] = img[i];
  std::set<int> seen;
  int c = 0;
  for (int x : ground) {
    if (seen.count(x)) continue;
    ++c;
    for (int y = x; !seen.count(y); y = s[y]) seen.insert(y);
  }
  return c;
}

inline bool d_condition(int i, int si) { return i % 2 ? i <= si : i >= si; }
inline bool dumont_condition(int i, int si) { return i % 2 ? i <= si : i > si; }
inline bool derangement_condition(int i, int si) { return i % 2 ? i < si : i > si; }

struct ClassCounts {
  std::uint64_t d = 0, dcycle = 0, dumont = 0, derangement = 0;
  std::map<int, std::uint64_t> d_by_cycles;
};

inline ClassCounts class_counts(const std::vector<int>& ground) {
  ClassCounts out;
  each_permutation(ground, [&](const std::vector<int>& img) {
    bool d = true, du = true, de = true;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      d = d && d_condition(ground[i], img[i]);
      du = du && dumont_condition(ground[i], img[i]);
      de = de && derangement_condition(ground[i], img[i]);
    }
    if (d) {
      ++out.d;
      int c = num_cycles(ground, img);
      ++out.d_by_cycles[c];
      if (c == 1) ++out.dcycle;
    }
    if (du) ++out.dumont;
    if (de) ++out.derangement;
  });
  return out;
}

// Proper colorings of a graph on 0..n-1 with t colors.
inline std::uint64_t count_colorings(int n, const std::vector<std::pair<int, int>>& edges, int t) {
  if (n == 0) return 1;
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  std::uint64_t total = 0;
  std::function<void(int)> go = [&](int v) {
    if (v == n) {
      ++total;
      return;
    }
    for (int c = 0; c < t; ++c) {
      bool ok = true;
      for (auto [a, b] : edges)
        if ((a == v && b < v && col[static_cast<std::size_t>(b)] == c) ||
            (b == v && a < v && col[static_cast<std::size_t>(a)] == c))
          ok = false;
      if (!ok) continue;
      col[static_cast<std::size_t>(v)] = c;
      go(v + 1);
    }
  };
  go(0);
  return total;
}

inline bool ferrers_adjacent(int u, int v) {
  if (u > v) std::swap(u, v);
  return u % 2 == 1 && v % 2 == 0;
}

// Partitions of ground (as label vectors) whose blocks induce connected
// subgraphs of the Ferrers graph.
inline std::vector<std::vector<std::vector<int>>> connected_partitions(const std::vector<int>& ground) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  auto connected = [](const std::vector<int>& b) {
    std::set<int> reach{b.front()};
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x : b)
        if (!reach.count(x))
          for (int y : reach)
            if (ferrers_adjacent(x, y)) {
              reach.insert(x);
              grew = true;
              break;
            }
    }
    return reach.size() == b.size();
  };
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == ground.size()) {
      for (const auto& b : blocks)
        if (!connected(b)) return;
      out.push_back(blocks);
      return;
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      blocks[k].push_back(ground[i]);
      go(i + 1);
      blocks[k].pop_back();
    }
    blocks.push_back({ground[i]});
    go(i + 1);
    blocks.pop_back();
  };
  go(0);
  return out;
}

// Labeled trees on ground through Pruefer sequences, as edge lists.
inline void each_labeled_tree(const std::vector<int>& ground,
                              const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  std::size_t n = ground.size();
  if (n == 1) {
    visit({});
    return;
  }
  if (n == 2) {
    visit({{ground[0], ground[1]}});
    return;
  }
  std::vector<std::size_t> seq(n - 2, 0);
  while (true) {
    std::vector<int> deg(n, 1);
    for (auto s : seq) ++deg[s];
    std::vector<std::pair<int, int>> edges;
    for (auto s : seq) {
      std::size_t leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.emplace_back(ground[leaf], ground[s]);
      --deg[leaf];
      --deg[s];
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (deg[i] == 1) rest.push_back(i);
    edges.emplace_back(ground[rest[0]], ground[rest[1]]);
    visit(edges);
    std::size_t k = 0;
    while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
    if (k == seq.size()) break;
  }
}

// ID condition from the definition: rooted at `root`, each odd internal
// node is below all its descendants and has only even children; each even
// internal node is above all its descendants and has only odd children.
inline bool id_rooted(const std::vector<std::pair<int, int>>& edges, int root) {
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  bool good = true;
  std::function<std::vector<int>(int, int)> below = [&](int v, int parent) {
    std::vector<int> desc;
    for (int c : adj[v]) {
      if (c == parent) continue;
      if (c % 2 == v % 2) good = false;
      auto sub = below(c, v);
      desc.push_back(c);
      desc.insert(desc.end(), sub.begin(), sub.end());
    }
    for (int d : desc)
      if ((v % 2 == 1 && d < v) || (v % 2 == 0 && d > v)) good = false;
    return desc;
  };
  below(root, 0);
  return good;
}

// Excedent functions on [m] whose image is exactly the even numbers.
inline std::vector<std::vector<int>> staircases(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(m));
  std::function<void(int)> go = [&](int j) {
    if (j > m) {
      std::set<int> img(f.begin(), f.end());
      std::set<int> evens;
      for (int e = 2; e <= m; e += 2) evens.insert(e);
      if (img == evens) out.push_back(f);
      return;
    }
    for (int v = j; v <= m; ++v) {
      if (v % 2) continue;
      f[static_cast<std::size_t>(j - 1)] = v;
      go(j + 1);
    }
  };
  go(1);
  return out;
}

// Permutations of [m] by number of drops (i > sigma(i)) that are not
// (even i, odd sigma(i)).
inline std::vector<std::uint64_t> d_table(int m) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(std::max(m, 1)), 0);
  auto g = range(m);
  each_permutation(g, [&](const std::vector<int>& img) {
    std::size_t k = 0;
    for (int i = 1; i <= m; ++i) {
      int s = img[static_cast<std::size_t>(i - 1)];
      if (i > s && !(i % 2 == 0 && s % 2 == 1)) ++k;
    }
    ++out[k];
  });
  return out;
}

}  // namespace oracle
