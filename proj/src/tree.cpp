#include "wtcensus/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wtcensus {

RootedTree RootedTree::from_dyck(const WeightedDyckWord& w) {
  RootedTree t;
  std::vector<TreeNode*> stack{&t.root_};
  for (const Token& tok : w.tokens()) {
    if (tok.step == Step::Up) {
      stack.back()->edges.emplace_back(tok.weight, TreeNode{});
      stack.push_back(&stack.back()->edges.back().second);
    } else {
      stack.pop_back();
    }
  }
  return t;
}

namespace {

void emit_node(const TreeNode& node, std::vector<Token>& out) {
  for (const auto& [weight, child] : node.edges) {
    out.push_back(Token{Step::Up, weight});
    emit_node(child, out);
    out.push_back(Token{Step::Down, weight});
  }
}

long long node_weight(const TreeNode& node) {
  long long w = 0;
  for (const auto& [weight, child] : node.edges) w += weight + node_weight(child);
  return w;
}

int node_edges(const TreeNode& node) {
  int m = static_cast<int>(node.edges.size());
  for (const auto& [weight, child] : node.edges) m += node_edges(child);
  return m;
}

void collect_degrees(const TreeNode& node, int parent_weight, int depth,
                     std::vector<int>& black, std::vector<int>& white) {
  long long degree = parent_weight;
  for (const auto& [weight, child] : node.edges) {
    degree += weight;
    collect_degrees(child, weight, depth + 1, black, white);
  }
  (depth % 2 == 0 ? black : white).push_back(static_cast<int>(degree));
}

void collect_weights(const TreeNode& node, std::vector<int>& weights) {
  for (const auto& [weight, child] : node.edges) {
    weights.push_back(weight);
    collect_weights(child, weights);
  }
}

// Flat view with plane cyclic order per vertex; edges are numbered in
// traversal (preorder) order, vertices in preorder.
struct FlatTree {
  struct Edge {
    int weight;
    int black_vertex;
    int white_vertex;
    int pos_at_black;  // index into cyclic[black_vertex]
    int pos_at_white;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> cyclic;  // vertex -> edge ids in plane order
  std::vector<bool> black;

  int other_end(int edge, int v) const {
    return edges[edge].black_vertex == v ? edges[edge].white_vertex : edges[edge].black_vertex;
  }
  int pos_at(int edge, int v) const {
    return edges[edge].black_vertex == v ? edges[edge].pos_at_black : edges[edge].pos_at_white;
  }
};

// At a non-root vertex the plane order is (parent edge, children in stored
// order); at the root it is the stored order itself.
void flatten(const TreeNode& node, int vertex, int depth, FlatTree& flat) {
  for (const auto& [weight, child] : node.edges) {
    int edge_id = static_cast<int>(flat.edges.size());
    int child_vertex = static_cast<int>(flat.cyclic.size());
    flat.cyclic[vertex].push_back(edge_id);
    flat.cyclic.emplace_back();
    flat.black.push_back(depth % 2 != 0);  // child color opposite to parent
    flat.cyclic[child_vertex].push_back(edge_id);

    bool parent_black = depth % 2 == 0;
    FlatTree::Edge e;
    e.weight = weight;
    e.black_vertex = parent_black ? vertex : child_vertex;
    e.white_vertex = parent_black ? child_vertex : vertex;
    e.pos_at_black = parent_black ? static_cast<int>(flat.cyclic[vertex].size()) - 1 : 0;
    e.pos_at_white = parent_black ? 0 : static_cast<int>(flat.cyclic[vertex].size()) - 1;
    flat.edges.push_back(e);

    flatten(child, child_vertex, depth + 1, flat);
  }
}

FlatTree flatten_tree(const TreeNode& root) {
  FlatTree flat;
  flat.cyclic.emplace_back();
  flat.black.push_back(true);
  flatten(root, 0, 0, flat);
  return flat;
}

// Couples of every edge at v except the entry edge, clockwise from the entry.
void walk_from(const FlatTree& flat, int v, int via_pos, std::vector<Token>& out) {
  const auto& cyc = flat.cyclic[v];
  const int d = static_cast<int>(cyc.size());
  for (int t = 1; t < d; ++t) {
    int e = cyc[(via_pos + t) % d];
    int u = flat.other_end(e, v);
    out.push_back(Token{Step::Up, flat.edges[e].weight});
    walk_from(flat, u, flat.pos_at(e, u), out);
    out.push_back(Token{Step::Down, flat.edges[e].weight});
  }
}

WeightedDyckWord code_rooted_at(const FlatTree& flat, int root_edge) {
  const auto& e = flat.edges[root_edge];
  const int b = e.black_vertex;
  const auto& cyc = flat.cyclic[b];
  const int d = static_cast<int>(cyc.size());
  std::vector<Token> out;
  for (int t = 0; t < d; ++t) {
    int f = cyc[(e.pos_at_black + t) % d];
    int u = flat.other_end(f, b);
    out.push_back(Token{Step::Up, flat.edges[f].weight});
    walk_from(flat, u, flat.pos_at(f, u), out);
    out.push_back(Token{Step::Down, flat.edges[f].weight});
  }
  return WeightedDyckWord::validate(std::move(out));
}

}  // namespace

WeightedDyckWord RootedTree::to_dyck() const {
  std::vector<Token> out;
  emit_node(root_, out);
  return WeightedDyckWord::validate(std::move(out));
}

long long RootedTree::weight() const { return node_weight(root_); }

int RootedTree::edge_count() const { return node_edges(root_); }

namespace {

// (even-depth vertices, odd-depth vertices)
std::pair<int, int> count_colors(const TreeNode& root) {
  int even = 0, odd = 0;
  std::vector<std::pair<const TreeNode*, int>> stack{{&root, 0}};
  while (!stack.empty()) {
    auto [node, d] = stack.back();
    stack.pop_back();
    (d % 2 == 0 ? even : odd)++;
    for (const auto& [w, child] : node->edges) stack.emplace_back(&child, d + 1);
  }
  return {even, odd};
}

}  // namespace

int RootedTree::black_count() const {
  if (edgeless()) throw std::domain_error("black_count: single-vertex tree has no colors");
  return count_colors(root_).first;
}

int RootedTree::white_count() const {
  if (edgeless()) throw std::domain_error("white_count: single-vertex tree has no colors");
  return count_colors(root_).second;
}

Passport RootedTree::passport() const {
  if (edgeless()) throw std::domain_error("passport: single-vertex tree has no colors");
  std::vector<int> black, white;
  collect_degrees(root_, 0, 0, black, white);
  return Passport(Partition(std::move(black)), Partition(std::move(white)));
}

Partition RootedTree::weight_distribution() const {
  if (edgeless()) throw std::domain_error("weight_distribution: tree has no edges");
  std::vector<int> weights;
  collect_weights(root_, weights);
  return Partition(std::move(weights));
}

std::vector<WeightedDyckWord> RootedTree::reroot_all() const {
  if (edgeless()) throw std::domain_error("reroot_all: tree has no edges");
  FlatTree flat = flatten_tree(root_);
  std::vector<WeightedDyckWord> codes;
  codes.reserve(flat.edges.size());
  for (int e = 0; e < static_cast<int>(flat.edges.size()); ++e)
    codes.push_back(code_rooted_at(flat, e));
  return codes;
}

int RootedTree::aut_order() const {
  auto codes = reroot_all();
  std::set<std::vector<Token>> distinct;
  for (const auto& c : codes) distinct.insert(c.tokens());
  const int m = static_cast<int>(codes.size());
  const int k = static_cast<int>(distinct.size());
  if (m % k != 0)
    throw std::logic_error("aut_order: edge count " + std::to_string(m) +
                           " not divisible by distinct rooting count " + std::to_string(k));
  return m / k;
}

WeightedDyckWord RootedTree::canonical_code() const {
  auto codes = reroot_all();
  return *std::min_element(codes.begin(), codes.end(), word_less);
}

std::vector<UnrootedClass> unrooted_census(int n) {
  if (n < 1) throw std::domain_error("unrooted_census: weight must be >= 1");
  struct WordCmp {
    bool operator()(const WeightedDyckWord& a, const WeightedDyckWord& b) const {
      return word_less(a, b);
    }
  };
  std::map<WeightedDyckWord, UnrootedClass, WordCmp> classes;
  std::set<std::vector<Token>> assigned;
  for_each_word(n, [&](const WeightedDyckWord& w) {
    if (assigned.contains(w.tokens())) return;
    RootedTree t = RootedTree::from_dyck(w);
    auto codes = t.reroot_all();
    std::set<std::vector<Token>> distinct;
    for (const auto& c : codes) distinct.insert(c.tokens());
    if (!distinct.contains(w.tokens()))
      throw std::logic_error("unrooted_census: word missing from its own rooting orbit");
    const int m = static_cast<int>(codes.size());
    const int k = static_cast<int>(distinct.size());
    if (m % k != 0) throw std::logic_error("unrooted_census: rooting orbit size does not divide m");
    auto canonical = *std::min_element(codes.begin(), codes.end(), word_less);
    classes.emplace(canonical, UnrootedClass{canonical, m / k, m, w.weight()});
    for (auto& toks : distinct) assigned.insert(std::move(toks));
  });
  std::vector<UnrootedClass> out;
  out.reserve(classes.size());
  for (auto& [code, cls] : classes) out.push_back(cls);
  return out;
}

}  // namespace wtcensus
