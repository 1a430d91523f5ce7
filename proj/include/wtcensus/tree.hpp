#pragma once

#include <vector>

#include "wtcensus/dyck.hpp"
#include "wtcensus/partition.hpp"

namespace wtcensus {

// One vertex of a rooted weighted bicolored plane tree, with its ordered
// child edges. Colors are positional: the root is black and colors alternate
// with depth, so they are never stored. At the root the first edge is the
// root edge (oriented black -> white).
struct TreeNode {
  std::vector<std::pair<int, TreeNode>> edges;  // (weight, subtree) in plane order

  bool operator==(const TreeNode&) const = default;
};

class RootedTree {
 public:
  RootedTree() = default;  // weight-0 single vertex (code epsilon)

  static RootedTree from_dyck(const WeightedDyckWord& w);
  WeightedDyckWord to_dyck() const;

  const TreeNode& root() const { return root_; }
  bool edgeless() const { return root_.edges.empty(); }
  long long weight() const;  // n
  int edge_count() const;    // m
  int black_count() const;   // p
  int white_count() const;   // q

  // sorted black degrees | sorted white degrees; rejects the edgeless tree
  Passport passport() const;
  // sorted multiset of edge weights; rejects the edgeless tree
  Partition weight_distribution() const;

  // One code per edge, in traversal (preorder) order of the original rooting:
  // the tree re-rooted at that edge, root at its black endpoint. The first
  // entry reproduces to_dyck().
  std::vector<WeightedDyckWord> reroot_all() const;

  // m / (number of distinct re-rooted codes); the divisibility is asserted.
  int aut_order() const;

  // min over reroot_all() under word_less
  WeightedDyckWord canonical_code() const;

  bool operator==(const RootedTree&) const = default;

 private:
  TreeNode root_;
};

// One isomorphism class of unrooted trees. Automorphisms preserve colors:
// a tree and its color-swap count as distinct classes.
struct UnrootedClass {
  WeightedDyckWord canonical_code;
  int aut_order;
  int edge_count;   // m
  long long weight; // n
};

// Partition of all rooted trees of weight n into unrooted classes, ordered by
// canonical code (word_less). Sum of m/aut over classes = a_n; sum of 1/aut
// is the c_n mass.
std::vector<UnrootedClass> unrooted_census(int n);

}  // namespace wtcensus
