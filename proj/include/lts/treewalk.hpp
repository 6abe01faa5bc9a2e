#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lts/worstcase.hpp"

namespace lts {

using TreeNode = std::uint32_t;

// Rooted ordered tree, root 0, children stored contiguously.
class Tree {
 public:
  // parent[0] is ignored; every other entry must lead back to 0.
  static Tree from_parents(const std::vector<TreeNode>& parent);
  static Tree path(std::size_t nodes);
  static Tree full_binary(std::uint32_t depth);

  std::size_t size() const { return first_.size() - 1; }
  std::size_t degree(TreeNode u) const { return first_[u + 1] - first_[u]; }
  TreeNode child(TreeNode u, std::size_t j) const { return kids_[first_[u] + j]; }
  bool is_ancestor(TreeNode a, TreeNode b) const { return tin_[a] <= tin_[b] && tout_[b] <= tout_[a]; }
  // index of the child of u on the way to descendant v
  std::size_t child_toward(TreeNode u, TreeNode v) const;

 private:
  std::vector<std::size_t> first_;
  std::vector<TreeNode> kids_;
  std::vector<std::uint32_t> tin_, tout_;
};

enum class TreeKind {
  Explicit,  // next node found from the deepest node by ancestor test
  Implicit,  // only child-by-index; the choices are recorded as packed bits
};

// List of nodes on a root-down walk. Grows at the far end by extend().
class TreeWalkProvider final : public Provider {
 public:
  TreeWalkProvider(const Tree& tree, TreeKind kind);

  std::optional<Position> length() const override { return std::nullopt; }
  TreeNode node(Pebble p) const { return slot_[p].node; }
  TreeNode frontier() const { return frontier_; }
  std::size_t frontier_depth() const { return depth_; }
  // Picks child j of the deepest node. Throws BadRequest if there is none.
  void extend(std::size_t j);
  // child index the walk takes below pebble p (which must sit above the frontier)
  std::size_t next_choice(Pebble p) const;
  std::uint64_t record_bits() const { return bits_; }

 protected:
  void on_head(Pebble slot) override;
  void on_advance(Pebble slot, Position from) override;
  void on_copy(Pebble dst, Pebble src) override;

 private:
  struct Slot {
    TreeNode node = 0;
    std::uint64_t offset = 0;  // implicit kind: bit offset of this node's choice
  };
  Slot& grow(Pebble p) {
    if (p >= slot_.size()) slot_.resize(p + 1);
    return slot_[p];
  }
  std::uint64_t read_bits(std::uint64_t at, std::uint32_t width) const;

  const Tree& tree_;
  TreeKind kind_;
  std::vector<Slot> slot_;
  TreeNode frontier_ = 0;
  std::size_t depth_ = 0;
  std::vector<std::uint64_t> words_;
  std::uint64_t bits_ = 0;
};

// Bits needed to name one of d children.
std::uint32_t choice_width(std::size_t d);

// Walk down a tree with back steps to the parent, over a worst-case synopsis.
class TreeWalk {
 public:
  TreeWalk(const Tree& tree, TreeKind kind);
  ~TreeWalk();

  // Moves to child j. Below the deepest node reached, j must match the walk.
  void descend(std::size_t j);
  void back();
  TreeNode node() const { return pv_.node(t_->current()); }
  std::size_t depth() const { return t_->position() - 1; }
  std::uint64_t record_bits() const { return pv_.record_bits(); }
  const WorstCasePebbler& traverser() const { return *t_; }
  const TreeWalkProvider& provider() const { return pv_; }

 private:
  const Tree& tree_;
  TreeWalkProvider pv_;
  std::unique_ptr<WorstCasePebbler> t_;
};

}  // namespace lts
