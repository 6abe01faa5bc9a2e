#pragma once

#include <cstdint>
#include <vector>

#include "lts/psp.hpp"

namespace lts {

// Complete tree of the given arity with `depth` levels of edges, numbered in
// pre-order from 1. Node number == list position.
struct TreeShape {
  std::uint32_t arity = 2;
  std::uint32_t depth = 0;
  std::uint64_t size = 1;
};

struct NodeId {
  Position preorder = 1;
  std::uint32_t depth = 0;
  std::vector<std::uint32_t> path;  // child indices from the root
  bool operator==(const NodeId&) const = default;
};

TreeShape make_shape(std::uint32_t arity, std::uint32_t depth);
// Smallest binary shape holding n nodes.
TreeShape binary_shape_for(std::uint64_t n);
// Shape for the k-level trade-off tree over n nodes: arity ceil(n^(1/k)).
TreeShape kary_shape_for(std::uint64_t n, std::uint32_t k);
std::uint64_t int_root_ceil(std::uint64_t n, std::uint32_t k);

// Size of any subtree whose root sits at `level`.
std::uint64_t level_size(const TreeShape& s, std::uint32_t level);

NodeId node_at(const TreeShape& s, Position preorder);
NodeId node_from_path(const TreeShape& s, const std::vector<std::uint32_t>& path);
std::uint64_t subtree_size(const TreeShape& s, const NodeId& v);
NodeId child(const TreeShape& s, const NodeId& v, std::uint32_t j);
NodeId parent(const TreeShape& s, const NodeId& v);
NodeId preorder_succ(const TreeShape& s, const NodeId& v);
NodeId preorder_pred(const TreeShape& s, const NodeId& v);
std::vector<NodeId> blue_path(const TreeShape& s, const NodeId& v);

// Green budget for one left child hanging off the blue path (binary only).
struct MirrorEntry {
  Position left_child = 0;
  std::uint32_t budget = 0;      // pebbles allowed on its right subpath
  std::uint32_t subpath_len = 0; // nodes on its full right subpath
  bool last = false;
};
std::vector<MirrorEntry> mirror_info(const TreeShape& s, const std::vector<NodeId>& path);

struct Growth {
  TreeShape shape;
  // old node x becomes node x + shift in the new tree
  std::uint64_t shift = 1;
};
Growth grow(const TreeShape& s);

// Sum of subtree sizes over all right children of a full binary tree.
std::uint64_t right_child_subtree_sum(const TreeShape& s);

namespace bin {

// Root-to-node step in a complete binary tree of height H (2^H - 1 nodes).
// `h` is the height of the node (leaves have height 1).
struct Step {
  Position pos;
  std::uint32_t h;
  bool left;  // false for right children and for the root
  bool root;
};

inline std::uint64_t size_of_height(std::uint32_t h) { return (std::uint64_t{1} << h) - 1; }

// Fills out with the path from the root to c.
void path_to(std::uint32_t H, Position c, std::vector<Step>& out);

// Height of node c in a tree of height H.
std::uint32_t height_of(std::uint32_t H, Position c);

// Spine node test: q lies on the right subpath hanging below v (height g),
// excluding v itself.
inline bool on_spine(Position v, std::uint32_t g, Position q) {
  if (q <= v) return false;
  std::uint64_t rest = (std::uint64_t{1} << g) - (q - v);
  if (q - v >= (std::uint64_t{1} << g)) return false;
  return rest >= 2 && (rest & (rest - 1)) == 0;
}

}  // namespace bin

}  // namespace lts
