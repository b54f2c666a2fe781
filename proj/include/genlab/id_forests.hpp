#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "genlab/ferrers.hpp"
#include "genlab/permutation.hpp"

namespace genlab {

/// Rooted tree with ordered children.
struct PlaneTree {
  int label = 0;
  std::vector<PlaneTree> children;

  std::size_t size() const;
  /// {"label":k,"children":[...]}
  nlohmann::json to_json() const;
  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// Tree on a finite set of positive labels, stored as a sorted edge list.
class UnrootedTree {
 public:
  UnrootedTree() = default;
  /// Throws InvalidArgument unless (nodes, edges) is a tree.
  UnrootedTree(std::vector<int> nodes, std::vector<std::pair<int, int>> edges);

  static UnrootedTree single(int label);
  static UnrootedTree from_plane(const PlaneTree& t);

  const std::vector<int>& nodes() const { return nodes_; }
  /// Each edge (a, b) has a < b; the list is sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<int> neighbors(int x) const;
  int min_node() const { return nodes_.front(); }
  int max_node() const { return nodes_.back(); }

  /// "[1-2,1-4]" or "[5]" for a single node.
  std::string key() const;
  /// {"nodes":[...],"edges":[[a,b],...]}
  nlohmann::json to_json() const;

  auto operator<=>(const UnrootedTree&) const = default;

 private:
  std::vector<int> nodes_;
  std::vector<std::pair<int, int>> edges_;
};

/// Trees sorted by their minimum node.
using IDForest = std::vector<UnrootedTree>;

std::string forest_key(const IDForest& f);
nlohmann::json forest_to_json(const IDForest& f);
/// Split (vertices, edges) into its component trees. Throws InvalidArgument
/// if the edge set has a cycle.
IDForest forest_from_edges(const std::vector<int>& vertices, const std::vector<Edge>& edges);
SetPartition forest_support(const IDForest& f);

/// The ID condition with t rooted at `root`: every internal odd node is
/// smaller than all its descendants and has only even children, every
/// internal even node is larger than all its descendants and has only odd
/// children.
bool is_id_rooted_at(const UnrootedTree& t, int root);

struct IdCheck {
  bool at_largest = false;
  bool at_smallest = false;
};

/// Evaluate the ID condition at both the largest and the smallest root.
IdCheck id_check(const UnrootedTree& t);
/// ID test at the largest root.
bool is_id_tree(const UnrootedTree& t);

enum class IdForestMethod {
  /// Spanning trees of the Ferrers graph on each block, filtered by the ID test.
  SpanningTreeFilter,
  /// NBC sets of the Ferrers graph.
  Nbc,
  /// SpanningTreeFilter for |V| <= 8, Nbc above.
  Auto,
};

inline constexpr std::size_t kMaxIdForestVertices = 12;

/// Visit every ID forest on V, optionally only those with k trees.
/// Throws SizeLimit when |V| > kMaxIdForestVertices.
void for_each_id_forest(const std::vector<int>& vertices, std::optional<std::size_t> k,
                        const std::function<void(const IDForest&)>& visit,
                        IdForestMethod method = IdForestMethod::Auto);
std::vector<IDForest> id_forests(const std::vector<int>& vertices, std::optional<std::size_t> k = std::nullopt,
                                 IdForestMethod method = IdForestMethod::Auto);
/// Every ID tree on exactly the node set V.
std::vector<UnrootedTree> id_trees(const std::vector<int>& vertices, IdForestMethod method = IdForestMethod::Auto);

/// Rooted at the largest node; children of an even node increasing, of an
/// odd node decreasing. Throws NotIDTree.
PlaneTree hat_form(const UnrootedTree& t);
/// Rooted at the smallest node with the same child orders. Throws NotIDTree.
PlaneTree tilde_form(const UnrootedTree& t);

/// Postorder word: children's words left to right, then the root.
std::vector<int> postorder(const PlaneTree& t);

/// Odd letters ascend to the next letter, even letters descend; a final odd
/// letter is the minimum, a final even letter the maximum.
bool is_w_word(const std::vector<int>& w);

/// Inverse of postorder on W-words. Throws NotWWord.
PlaneTree gamma(const std::vector<int>& w);

/// The maximal segments gamma hangs below the last letter of w.
std::vector<std::vector<int>> gamma_segments(const std::vector<int>& w);

/// The cycle (pw(hat_form(t))). Throws NotIDTree.
Permutation psi(const UnrootedTree& t);
/// The cycle (pw(tilde_form(t))). Throws NotIDTree.
Permutation psi_tilde(const UnrootedTree& t);
/// One cycle per tree.
Permutation psi_forest(const IDForest& f);

std::string word_to_string(const std::vector<int>& w);

}  // namespace genlab
