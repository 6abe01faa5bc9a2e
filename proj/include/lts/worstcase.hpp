#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "lts/traverser.hpp"
#include "lts/vtree.hpp"

namespace lts {

// Bookkeeping for the explicit record tree behind the synopsis: one record
// per pebble, extra fields for reds. Only accounted, not packed.
struct PebbleTreeStats {
  std::uint64_t nodes = 0;
  std::uint64_t reds = 0;
  std::uint64_t bits = 0;
  std::uint64_t bits_max = 0;
  std::uint64_t nodes_max = 0;
  std::uint64_t reds_max = 0;
  std::uint64_t greens_max = 0;
  std::uint64_t mutations_total = 0;
  std::uint32_t mutations_last = 0;  // during the latest forward step
  std::uint32_t mutations_max = 0;   // worst forward step so far
};

// Bit budget of the record tree for a list of n nodes.
std::uint64_t pebble_tree_bits(std::uint64_t n, std::uint64_t nodes, std::uint64_t reds);
std::uint64_t pebble_tree_bit_cap(std::uint64_t n);

// Worst-case pebbler. Only run starts of the blue path carry pebbles (the
// root, every right child on it, and the current node). Red pebbles walk up
// green paths ahead of need during back steps, so a back step never rebuilds
// more than a constant plus the log of the distance from the farthest point.
//
// Forward steps cost one list-step and a constant number of record-tree
// changes; surplus pebbles are released one per forward step.
//
// n == 0 starts from a three-node tree and grows on demand.
class WorstCasePebbler final : public Traverser {
 public:
  WorstCasePebbler(Provider& pv, std::uint64_t n);
  ~WorstCasePebbler() override;

  void forward() override;
  void back() override;
  Position position() const override { return path_.back().pos; }
  Pebble current() const override { return cur_; }
  Provider& provider() override { return pv_; }
  std::string name() const override { return "worstcase"; }
  void pebbled(std::vector<Pebble>& out) const override;

  std::uint32_t height() const { return H_; }
  Position farthest() const { return farthest_; }
  std::size_t red_count() const { return reds_.size(); }
  std::size_t green_count() const;
  std::size_t pending_count() const { return pending_.size(); }
  const PebbleTreeStats& stats() const { return stats_; }
  // Blue pebbles with the node each stands for (root first), current last.
  std::vector<std::pair<Position, Position>> blue_nodes() const;
  void check() const;

 private:
  struct Green {
    Position node;
    Pebble p;
  };
  struct Red {
    Position w;  // right child whose left sibling's spine this red builds
    Pebble p;
    std::vector<Green> greens;  // ascending nodes
  };

  bool run_start(std::size_t i) const { return i == 0 || !path_[i].left; }
  std::size_t run_start_of(std::size_t i) const;
  // Index of node w on the path, or npos.
  std::size_t index_of(Position w) const;
  bool red_needed(std::size_t idx) const;
  Position red_target(std::size_t idx) const;
  Red* find_red(Position w);
  void advance_reds();
  void destroy_red(std::size_t k);
  void eliminate_one();
  void grow();
  void mutate(std::uint32_t k = 1);
  void account();

  Provider& pv_;
  std::uint64_t n_;  // 0 when unbounded
  std::uint32_t H_;
  std::vector<bin::Step> path_;
  std::vector<Pebble> anchor_;  // per path entry; kNoPebble on left children
  Pebble cur_ = kNoPebble;      // equals anchor_.back() when the current node is a run start
  std::vector<Red> reds_;       // ordered by w
  std::deque<Pebble> pending_;
  Position farthest_ = 1;
  bool in_forward_ = false;
  PebbleTreeStats stats_;
};

}  // namespace lts
