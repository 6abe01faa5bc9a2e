#include "lts/vtree.hpp"

#include <limits>

namespace lts {

namespace {

std::uint64_t pow_sat(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
    r *= b;
  }
  return r;
}

void check_valid(const TreeShape& s, const NodeId& v) {
  if (v.preorder < 1 || v.preorder > s.size || v.depth > s.depth || v.path.size() != v.depth)
    throw BadRequest("invalid node");
}

}  // namespace

std::uint64_t int_root_ceil(std::uint64_t n, std::uint32_t k) {
  if (k == 0) throw BadRequest("root of order 0");
  if (n <= 1) return 1;
  // start from the floating estimate and correct
  std::uint64_t r = 1;
  while (pow_sat(r, k) < n) r *= 2;
  std::uint64_t lo = r / 2, hi = r;
  while (lo + 1 < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (pow_sat(mid, k) >= n) hi = mid; else lo = mid;
  }
  return hi;
}

TreeShape make_shape(std::uint32_t arity, std::uint32_t depth) {
  if (arity < 2) throw BadRequest("arity must be at least 2");
  TreeShape s{arity, depth, 0};
  std::uint64_t level = 1;
  for (std::uint32_t d = 0; d <= depth; ++d) {
    s.size += level;
    if (d < depth) level *= arity;
  }
  return s;
}

TreeShape binary_shape_for(std::uint64_t n) {
  std::uint32_t h = 1;
  while (bin::size_of_height(h) < n) ++h;
  return make_shape(2, h - 1);
}

TreeShape kary_shape_for(std::uint64_t n, std::uint32_t k) {
  if (k < 2) throw BadRequest("k must be at least 2");
  std::uint64_t d = int_root_ceil(n, k);
  if (d < 2) d = 2;
  return make_shape(static_cast<std::uint32_t>(d), k);
}

std::uint64_t level_size(const TreeShape& s, std::uint32_t level) {
  std::uint64_t sz = 0, cnt = 1;
  for (std::uint32_t d = level; d <= s.depth; ++d) {
    sz += cnt;
    cnt *= s.arity;
  }
  return sz;
}

NodeId node_at(const TreeShape& s, Position x) {
  if (x < 1 || x > s.size) throw BadRequest("position outside tree");
  NodeId v;
  Position cur = 1;
  while (cur != x) {
    std::uint64_t cs = level_size(s, v.depth + 1);
    auto j = static_cast<std::uint32_t>((x - cur - 1) / cs);
    cur = cur + 1 + j * cs;
    v.path.push_back(j);
    ++v.depth;
  }
  v.preorder = x;
  return v;
}

NodeId node_from_path(const TreeShape& s, const std::vector<std::uint32_t>& path) {
  if (path.size() > s.depth) throw BadRequest("path too deep");
  NodeId v;
  for (auto j : path) {
    if (j >= s.arity) throw BadRequest("child index out of range");
    v.preorder += 1 + j * level_size(s, v.depth + 1);
    ++v.depth;
  }
  v.path = path;
  return v;
}

std::uint64_t subtree_size(const TreeShape& s, const NodeId& v) {
  check_valid(s, v);
  return level_size(s, v.depth);
}

NodeId child(const TreeShape& s, const NodeId& v, std::uint32_t j) {
  check_valid(s, v);
  if (v.depth == s.depth) throw BadRequest("leaf has no children");
  if (j >= s.arity) throw BadRequest("child index out of range");
  NodeId c = v;
  c.preorder = v.preorder + 1 + j * level_size(s, v.depth + 1);
  c.depth = v.depth + 1;
  c.path.push_back(j);
  return c;
}

NodeId parent(const TreeShape& s, const NodeId& v) {
  check_valid(s, v);
  if (v.depth == 0) throw BadRequest("root has no parent");
  NodeId p = v;
  std::uint32_t j = p.path.back();
  p.path.pop_back();
  p.depth = v.depth - 1;
  p.preorder = v.preorder - 1 - j * level_size(s, v.depth);
  return p;
}

NodeId preorder_succ(const TreeShape& s, const NodeId& v) {
  check_valid(s, v);
  if (v.depth < s.depth) return child(s, v, 0);
  // leaf: climb to the nearest ancestor-or-self that has a next sibling
  NodeId u = v;
  while (u.depth > 0 && u.path.back() + 1 == s.arity) u = parent(s, u);
  if (u.depth == 0) throw BadRequest("last node has no successor");
  NodeId p = parent(s, u);
  return child(s, p, u.path.back() + 1);
}

NodeId preorder_pred(const TreeShape& s, const NodeId& v) {
  check_valid(s, v);
  if (v.depth == 0) throw BadRequest("root has no predecessor");
  NodeId p = parent(s, v);
  if (v.path.back() == 0) return p;
  // rightmost leaf below the previous sibling
  NodeId u = child(s, p, v.path.back() - 1);
  while (u.depth < s.depth) u = child(s, u, s.arity - 1);
  return u;
}

std::vector<NodeId> blue_path(const TreeShape& s, const NodeId& v) {
  check_valid(s, v);
  std::vector<NodeId> out;
  NodeId u = node_from_path(s, {});
  out.push_back(u);
  for (auto j : v.path) {
    u = child(s, u, j);
    out.push_back(u);
  }
  return out;
}

std::vector<MirrorEntry> mirror_info(const TreeShape& s, const std::vector<NodeId>& path) {
  if (s.arity != 2) throw BadRequest("mirror_info is defined for binary trees");
  std::vector<MirrorEntry> out;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i].path.back() != 1) continue;
    // right child on the path: its left sibling hangs off the path
    MirrorEntry e;
    e.left_child = path[i].preorder - level_size(s, path[i].depth);
    e.subpath_len = s.depth - path[i].depth + 1;
    std::uint32_t run = 1;
    std::size_t j = i + 1;
    while (j < path.size() && path[j].path.back() == 0) { ++run; ++j; }
    e.last = (j == path.size());
    e.budget = e.last ? e.subpath_len : std::min(run, e.subpath_len);
    out.push_back(e);
  }
  return out;
}

Growth grow(const TreeShape& s) {
  if (s.arity != 2) throw BadRequest("grow is defined for binary trees");
  return Growth{make_shape(2, s.depth + 1), 1};
}

std::uint64_t right_child_subtree_sum(const TreeShape& s) {
  if (s.arity != 2) throw BadRequest("binary only");
  // level d holds 2^(d-1) right children, each of subtree size level_size(d)
  std::uint64_t sum = 0;
  for (std::uint32_t d = 1; d <= s.depth; ++d) sum += (std::uint64_t{1} << (d - 1)) * level_size(s, d);
  return sum;
}

namespace bin {

void path_to(std::uint32_t H, Position c, std::vector<Step>& out) {
  out.clear();
  Position pos = 1;
  std::uint32_t h = H;
  out.push_back({1, H, false, true});
  while (pos != c) {
    std::uint64_t half = size_of_height(h - 1);
    if (c <= pos + half) {
      pos += 1;
      --h;
      out.push_back({pos, h, true, false});
    } else {
      pos += 1 + half;
      --h;
      out.push_back({pos, h, false, false});
    }
  }
}

std::uint32_t height_of(std::uint32_t H, Position c) {
  Position pos = 1;
  std::uint32_t h = H;
  while (pos != c) {
    std::uint64_t half = size_of_height(h - 1);
    pos += (c <= pos + half) ? 1 : 1 + half;
    --h;
  }
  return h;
}

}  // namespace bin

}  // namespace lts
