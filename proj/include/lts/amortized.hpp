#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lts/recycling_bin.hpp"
#include "lts/traverser.hpp"
#include "lts/vtree.hpp"

namespace lts {

enum class AmortizedVariant { Basic, Refined };

// Virtual binary tree pebbler with O(1) forward steps and amortized
// logarithmic back steps. The blue path from the root to the current node is
// fully pebbled. For every right child on it, the right subpath below its
// left sibling is kept as green placeholders, rebuilt on demand.
//
// Basic keeps green paths in full. Refined draws every pebble from a
// recycling bin of 2*ceil(lg n) handles and trims green paths to their
// mirror budget.
class AmortizedPebbler final : public Traverser {
 public:
  AmortizedPebbler(Provider& pv, std::uint64_t n, AmortizedVariant variant);
  ~AmortizedPebbler() override;

  void forward() override;
  void back() override;
  Position position() const override { return path_.back().pos; }
  Pebble current() const override { return blue_.back(); }
  Provider& provider() override { return pv_; }
  std::string name() const override { return variant_ == AmortizedVariant::Basic ? "basic" : "refined"; }
  void pebbled(std::vector<Pebble>& out) const override;

  const TreeShape& shape() const { return shape_; }
  std::size_t pool_size() const { return pool_; }
  // Pebbles placed on the blue path or on green paths (refined: excludes the bag).
  std::size_t in_use() const;
  std::size_t in_use_max() const { return in_use_max_; }
  std::size_t green_count() const;
  const RecyclingBin* bin() const { return rb_.get(); }
  // Verifies blue/green placement and green budgets. O(log^2 n).
  void check() const;

 protected:
  Pebble take_spare(Pebble like) override;
  void return_spare(Pebble p) override;

 private:
  struct Entry {  // basic variant's green path store
    Position key;
    std::vector<Pebble> pebbles;
  };

  Pebble alloc_at(Pebble from);
  void free_pebble(Pebble p);
  void pop_newest_list(Position& key, std::vector<Pebble>& pebbles, std::uint32_t& removed);
  void push_list(Position key, std::vector<Pebble> pebbles);
  void trim_last_green(std::size_t a_idx);
  void note_in_use();

  Provider& pv_;
  AmortizedVariant variant_;
  TreeShape shape_;
  std::uint32_t H_;  // tree height in levels
  std::size_t pool_ = 0;
  std::vector<bin::Step> path_;  // blue path, root first
  std::vector<Pebble> blue_;     // parallel to path_
  std::vector<Entry> greens_;    // basic only
  std::unique_ptr<RecyclingBin> rb_;
  std::vector<Pebble> spare_from_bag_;
  std::size_t in_use_max_ = 0;
};

}  // namespace lts
