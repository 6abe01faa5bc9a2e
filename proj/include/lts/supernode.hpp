#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lts/worstcase.hpp"

namespace lts {

// List of super-nodes, each `block` consecutive nodes of a base list. A pebble
// here is a base pebble on the first node of its super-node.
class SuperNodeProvider final : public Provider {
 public:
  SuperNodeProvider(Provider& base, std::uint64_t block);
  std::optional<Position> length() const override;
  Pebble base_of(Pebble p) const { return base_[p]; }
  std::uint64_t block() const { return block_; }
  // The next advance landing on super-node `at` copies base pebble `src`
  // (which must sit on that super-node's first node) instead of walking.
  void offer(Position at, Pebble src) {
    offer_at_ = at;
    offer_src_ = src;
  }

 protected:
  void on_head(Pebble slot) override;
  void on_advance(Pebble slot, Position from) override;
  void on_copy(Pebble dst, Pebble src) override;
  void on_release(Pebble slot) override;

 private:
  Pebble& slot(Pebble p) {
    if (p >= base_.size()) base_.resize(p + 1, kNoPebble);
    return base_[p];
  }

  Provider& base_pv_;
  std::uint64_t block_;
  std::vector<Pebble> base_;
  Position offer_at_ = 0;
  Pebble offer_src_ = kNoPebble;
};

// Largest number of record-tree changes in one forward step of the
// worst-case pebbler, over `steps` forward steps.
std::uint32_t calibrate_forward_mutations(std::uint64_t steps = 10000);

// Worst-case pebbler run over super-nodes, so its per-forward work is spread
// over `block` base steps. Back steps inside a super-node walk from its first
// node.
class SuperNodeTraverser final : public Traverser {
 public:
  // block == 0 derives the block from epsilon and a calibration run.
  SuperNodeTraverser(Provider& base, std::uint64_t n, double epsilon, std::uint64_t block = 0);
  ~SuperNodeTraverser() override;

  void forward() override;
  void back() override;
  Position position() const override { return base_.position(cur_); }
  Pebble current() const override { return cur_; }
  Provider& provider() override { return base_; }
  std::string name() const override { return "supernode"; }
  void pebbled(std::vector<Pebble>& out) const override;

  std::uint64_t block() const { return sp_->block(); }
  std::uint32_t calibrated_c() const { return c_; }
  // synopsis work (record-tree changes plus the shortcut copy) per base forward step
  double work_per_forward() const {
    return forward_steps_ ? static_cast<double>(work_) / static_cast<double>(forward_steps_) : 0.0;
  }
  std::uint64_t synopsis_back_steps() const { return inner_backs_; }
  const WorstCasePebbler& inner() const { return *inner_; }

 private:
  Provider& base_;
  std::uint32_t c_ = 0;
  std::unique_ptr<SuperNodeProvider> sp_;
  std::unique_ptr<WorstCasePebbler> inner_;
  Pebble cur_ = kNoPebble;
  std::uint64_t work_ = 0;
  std::uint64_t forward_steps_ = 0;
  std::uint64_t inner_backs_ = 0;
};

}  // namespace lts
