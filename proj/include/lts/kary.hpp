#pragma once

#include <cstdint>
#include <vector>

#include "lts/traverser.hpp"
#include "lts/vtree.hpp"

namespace lts {

enum class KaryMode { Sparse, Dense };

// Pebbler over a depth-k tree of arity ceil(n^(1/k)).
//
// Sparse: blue path plus, for every blue node that is not a first child, a
// green last-child path below its nearest left sibling, trimmed to a budget
// that follows the run of first children beneath it. Rebuilding an empty
// green path walks from the parent across the preceding siblings.
//
// Dense: as Sparse, and every left sibling of a blue or green node carries a
// pebble too, so a rebuild only walks through one subtree.
class KaryPebbler final : public Traverser {
 public:
  KaryPebbler(Provider& pv, std::uint64_t n, std::uint32_t k, KaryMode mode);
  ~KaryPebbler() override;

  void forward() override;
  void back() override;
  Position position() const override { return blue_.back().node.pos; }
  Pebble current() const override { return blue_.back().p; }
  Provider& provider() override { return pv_; }
  std::string name() const override { return mode_ == KaryMode::Sparse ? "sparse" : "dense"; }
  void pebbled(std::vector<Pebble>& out) const override;

  const TreeShape& shape() const { return shape_; }
  std::size_t green_count() const;
  void check() const;

 private:
  struct Node {
    Position pos;
    std::uint32_t depth;
    std::uint32_t index;  // child index under the parent
  };
  struct Green {
    Pebble p;
    std::vector<Pebble> sibs;  // dense: all left siblings, except on the top node
  };
  struct Blue {
    Node node;
    Pebble p;
    std::vector<Pebble> lsibs;  // dense: left siblings but the nearest one
    std::vector<Green> green;   // last-child path of the nearest left sibling
  };

  std::uint64_t sub(std::uint32_t depth) const { return sizes_[depth]; }
  Node child(const Node& u, std::uint32_t j) const {
    return {u.pos + 1 + j * sub(u.depth + 1), u.depth + 1, j};
  }
  std::size_t budget(std::size_t i) const;
  void enforce_budgets();
  void release_green(Green& g);
  void split_siblings(Blue& b, std::vector<Pebble>&& sibs);

  Provider& pv_;
  KaryMode mode_;
  TreeShape shape_;
  std::uint32_t d_;
  std::vector<std::uint64_t> sizes_;  // subtree size by depth
  std::vector<Blue> blue_;
};

}  // namespace lts
