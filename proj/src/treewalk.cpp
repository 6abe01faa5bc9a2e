#include "lts/treewalk.hpp"

#include <algorithm>
#include <bit>

namespace lts {

std::uint32_t choice_width(std::size_t d) {
  return d <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(d - 1));
}

Tree Tree::from_parents(const std::vector<TreeNode>& parent) {
  if (parent.empty()) throw BadRequest("tree needs a root");
  const std::size_t n = parent.size();
  Tree t;
  t.first_.assign(n + 1, 0);
  for (std::size_t v = 1; v < n; ++v) {
    if (parent[v] >= n || parent[v] == v) throw BadRequest("bad parent of node " + std::to_string(v));
    ++t.first_[parent[v] + 1];
  }
  for (std::size_t u = 0; u < n; ++u) t.first_[u + 1] += t.first_[u];
  t.kids_.resize(n - 1);
  std::vector<std::size_t> fill(t.first_.begin(), t.first_.end() - 1);
  for (std::size_t v = 1; v < n; ++v) t.kids_[fill[parent[v]]++] = static_cast<TreeNode>(v);

  t.tin_.assign(n, 0);
  t.tout_.assign(n, 0);
  std::vector<std::pair<TreeNode, std::size_t>> stack{{0, 0}};
  std::uint32_t clock = 0, seen = 1;
  t.tin_[0] = clock++;
  while (!stack.empty()) {
    auto& [u, j] = stack.back();
    if (j < t.degree(u)) {
      TreeNode c = t.child(u, j++);
      t.tin_[c] = clock++;
      ++seen;
      stack.push_back({c, 0});
    } else {
      t.tout_[u] = clock++;
      stack.pop_back();
    }
  }
  if (seen != n) throw BadRequest("parent array is not a tree rooted at 0");
  return t;
}

Tree Tree::path(std::size_t nodes) {
  std::vector<TreeNode> p(nodes);
  for (std::size_t v = 1; v < nodes; ++v) p[v] = static_cast<TreeNode>(v - 1);
  return from_parents(p);
}

Tree Tree::full_binary(std::uint32_t depth) {
  std::size_t n = (std::size_t{2} << depth) - 1;
  std::vector<TreeNode> p(n);
  for (std::size_t v = 1; v < n; ++v) p[v] = static_cast<TreeNode>((v - 1) / 2);
  return from_parents(p);
}

std::size_t Tree::child_toward(TreeNode u, TreeNode v) const {
  auto b = kids_.begin() + static_cast<std::ptrdiff_t>(first_[u]);
  auto e = kids_.begin() + static_cast<std::ptrdiff_t>(first_[u + 1]);
  // children are in DFS order, so the last one entered at or before v
  auto it = std::upper_bound(b, e, tin_[v], [&](std::uint32_t x, TreeNode c) { return x < tin_[c]; });
  if (it == b || !is_ancestor(*(it - 1), v)) throw InvariantViolation("node is not below this one");
  return static_cast<std::size_t>(it - 1 - b);
}

TreeWalkProvider::TreeWalkProvider(const Tree& tree, TreeKind kind) : tree_(tree), kind_(kind) {}

void TreeWalkProvider::extend(std::size_t j) {
  std::size_t d = tree_.degree(frontier_);
  if (j >= d) throw BadRequest("node " + std::to_string(frontier_) + " has no child " + std::to_string(j));
  if (kind_ == TreeKind::Implicit) {
    std::uint32_t w = choice_width(d);
    for (std::uint32_t i = 0; i < w; ++i, ++bits_) {
      if (bits_ % 64 == 0) words_.push_back(0);
      if ((j >> i) & 1) words_.back() |= std::uint64_t{1} << (bits_ % 64);
    }
  }
  frontier_ = tree_.child(frontier_, j);
  ++depth_;
}

std::uint64_t TreeWalkProvider::read_bits(std::uint64_t at, std::uint32_t width) const {
  std::uint64_t v = 0;
  for (std::uint32_t i = 0; i < width; ++i, ++at)
    v |= ((words_[at / 64] >> (at % 64)) & 1) << i;
  return v;
}

std::size_t TreeWalkProvider::next_choice(Pebble p) const {
  const Slot& s = slot_[p];
  if (s.node == frontier_) throw InvariantViolation("no recorded step below the deepest node");
  if (kind_ == TreeKind::Explicit) return tree_.child_toward(s.node, frontier_);
  return read_bits(s.offset, choice_width(tree_.degree(s.node)));
}

void TreeWalkProvider::on_head(Pebble slot) { grow(slot) = Slot{}; }

void TreeWalkProvider::on_advance(Pebble slot, Position from) {
  if (from > depth_) throw InvariantViolation("advance past the deepest node");
  Slot& s = slot_[slot];
  std::size_t j = next_choice(slot);
  if (kind_ == TreeKind::Implicit) s.offset += choice_width(tree_.degree(s.node));
  s.node = tree_.child(s.node, j);
}

void TreeWalkProvider::on_copy(Pebble dst, Pebble src) {
  grow(dst);
  slot_[dst] = slot_[src];
}

TreeWalk::TreeWalk(const Tree& tree, TreeKind kind) : tree_(tree), pv_(tree, kind) {
  t_ = std::make_unique<WorstCasePebbler>(pv_, 0);
}

TreeWalk::~TreeWalk() = default;

void TreeWalk::descend(std::size_t j) {
  TreeNode u = node();
  if (j >= tree_.degree(u)) throw BadRequest("node " + std::to_string(u) + " has no child " + std::to_string(j));
  if (depth() == pv_.frontier_depth()) {
    pv_.extend(j);
  } else if (pv_.next_choice(t_->current()) != j) {
    throw BadRequest("child " + std::to_string(j) + " leaves the recorded walk");
  }
  t_->forward();
}

void TreeWalk::back() {
  if (depth() == 0) throw BadRequest("back step at the root");
  t_->back();
}

}  // namespace lts
