#pragma once

#include <string>
#include <vector>

#include "fpaths/fpath.hpp"

namespace fpaths {

/// A non-root vertex. Leaves have no children and weight 0.
struct WNode {
  int weight = 0;
  std::vector<WNode> children;

  bool is_leaf() const { return children.empty(); }
  friend bool operator==(const WNode&, const WNode&) = default;
};

/// Weighted ordered tree, stored as the root's subtrees in drawn
/// left-to-right order.
class WTree {
 public:
  WTree() = default;

  /// Throws EmptyTree, WeightOutOfRange or WeightOnLeafOrRoot; the error index
  /// is the preorder label of the offending vertex (root = 0).
  static WTree from_subtrees(std::vector<WNode> subtrees);
  static WTree trusted(std::vector<WNode> subtrees) { return WTree(std::move(subtrees)); }

  const std::vector<WNode>& subtrees() const { return subtrees_; }
  int root_degree() const { return static_cast<int>(subtrees_.size()); }
  int edges() const;

  friend bool operator==(const WTree&, const WTree&) = default;

 private:
  explicit WTree(std::vector<WNode> subtrees) : subtrees_(std::move(subtrees)) {}
  std::vector<WNode> subtrees_;
};

WTree validate_wtree(std::vector<WNode> subtrees);

/// One entry per vertex v_0 .. v_E in preorder.
struct PreorderVertex {
  int parent = -1;  // preorder label, -1 for the root
  int weight = 0;
  int degree = 0;
  bool first_child = false;
};
std::vector<PreorderVertex> preorder(const WTree& t);

/// (deg(root)-1, leaf-1, one)
StatTriple wtree_stats(const WTree& t);

FPath phi_T(const WTree& t);
WTree psi_T(const FPath& q);

/// Every weighted ordered tree with `edges` edges, ordered by shape and then
/// by the preorder weight vector.
std::vector<WTree> gen_wtrees(int edges, int guard = kDefaultFPathGuard);

/// Root children of s, then those of t.
WTree wtree_direct_sum(const WTree& t, const WTree& s);

/// "[(1 L L) L]"
std::string render_wtree(const WTree& t);
WTree parse_wtree(const std::string& text);

}  // namespace fpaths
