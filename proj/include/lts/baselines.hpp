#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lts/traverser.hpp"

namespace lts {

enum class BaselineKind { RestartFromHead, TrailingAll, UniformK, Skeleton };

// Pebble at current_position - 1, found by walking a fresh pebble from the
// head. Charges position - 2 list-steps.
Pebble oracle_back(Provider& pv, Pebble cur);

// Keeps the head and the current node only.
class RestartFromHead final : public Traverser {
 public:
  explicit RestartFromHead(Provider& pv);
  void forward() override;
  void back() override;
  Position position() const override { return pv_.position(cur_); }
  Pebble current() const override { return cur_; }
  Provider& provider() override { return pv_; }
  std::string name() const override { return "restart"; }
  void pebbled(std::vector<Pebble>& out) const override;

 private:
  Provider& pv_;
  Pebble head_, cur_;
};

// One pebble per node up to the current one.
class TrailingAll final : public Traverser {
 public:
  explicit TrailingAll(Provider& pv);
  void forward() override;
  void back() override;
  Position position() const override { return trail_.size(); }
  Pebble current() const override { return trail_.back(); }
  Provider& provider() override { return pv_; }
  std::string name() const override { return "trailing"; }
  void pebbled(std::vector<Pebble>& out) const override { out = trail_; }

 private:
  Provider& pv_;
  std::vector<Pebble> trail_;
};

// Anchors every ceil(n/k) nodes, dropped while passing them going forward.
class UniformK final : public Traverser {
 public:
  UniformK(Provider& pv, std::uint64_t n, std::uint32_t k);
  void forward() override;
  void back() override;
  Position position() const override { return pv_.position(cur_); }
  Pebble current() const override { return cur_; }
  Provider& provider() override { return pv_; }
  std::string name() const override { return "uniform"; }
  void pebbled(std::vector<Pebble>& out) const override;

 private:
  Provider& pv_;
  std::uint64_t stride_;
  std::vector<Pebble> anchors_;  // anchors_[m] sits at 1 + m*stride_
  Pebble cur_;
};

// Back-traversal-only skeleton: pointers at distance 2^i behind the current
// node, rebuilt recursively between neighbouring pointers.
struct Skeleton {
  Provider* pv = nullptr;
  std::uint64_t n = 0;
  std::vector<Pebble> ptr;  // ptr[i] at n - 2^i; the last one sits on the head
  Pebble cur = kNoPebble;
};

struct SkeletonLog {
  std::vector<Position> visited;
  std::uint64_t list_steps = 0;
  std::uint64_t pebbles_max = 0;
};

Skeleton skeleton_build(Provider& pv, std::uint64_t n);
// Visits n-1 down to 1. `visit` sees each position and the pebble on it.
SkeletonLog skeleton_back_all(Skeleton& sk, const std::function<void(Position, Pebble)>& visit = {});

}  // namespace lts
