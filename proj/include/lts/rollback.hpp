#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <vector>

#include "lts/minivm.hpp"
#include "lts/worstcase.hpp"

namespace lts {

enum class RollbackMode {
  Synopsis,  // every VM state is a list node
  Delta,     // recent steps as reverse deltas, block starts in the synopsis
};

// A MiniVM run that can step back to its preceding state.
class ReversibleVM {
 public:
  ReversibleVM(Program prog, VMState init = {}, RollbackMode mode = RollbackMode::Synopsis,
               std::uint64_t block = 16);
  ~ReversibleVM();
  ReversibleVM(const ReversibleVM&) = delete;
  ReversibleVM& operator=(const ReversibleVM&) = delete;

  void step();
  void run_forward(std::uint64_t steps) {
    for (std::uint64_t i = 0; i < steps; ++i) step();
  }
  // Throws BadRequest at s_0.
  void rollback();

  std::uint64_t index() const { return j_; }
  const VMState& state() const;
  RollbackMode mode() const { return mode_; }
  std::uint64_t block() const { return block_; }

  // VM instructions executed so far, first runs and re-runs alike
  std::uint64_t vm_steps() const { return vm_steps_; }
  std::uint64_t last_rollback_resteps() const { return last_resteps_; }
  // full states held: synopsis pebbles, plus the live state in delta mode
  std::size_t snapshots_stored() const;
  std::size_t deltas_stored() const { return ring_.size(); }
  std::size_t delta_bytes() const;

 private:
  VMState run_one(const VMState& s);

  Program prog_;
  RollbackMode mode_;
  std::uint64_t block_;
  std::uint64_t j_ = 0;
  std::uint64_t vm_steps_ = 0;
  std::uint64_t last_resteps_ = 0;

  // Synopsis mode: nodes are states. Delta mode: node P holds s_{(P-1)*block}.
  std::unique_ptr<GeneratedProvider<VMState>> pv_;
  std::unique_ptr<WorstCasePebbler> t_;

  VMState live_;  // delta mode only
  std::deque<Delta> ring_;
};

// Keeps every state. Reference for tests.
class RecordAllVM {
 public:
  explicit RecordAllVM(Program prog, VMState init = {}) : prog_(std::move(prog)), states_{init} {}
  void step() {
    if (j_ + 1 == states_.size()) states_.push_back(vm_step(prog_, states_.back()));
    ++j_;
  }
  void rollback() {
    if (j_ == 0) throw BadRequest("rollback at the initial state");
    --j_;
  }
  std::uint64_t index() const { return j_; }
  const VMState& state() const { return states_[j_]; }

 private:
  Program prog_;
  std::vector<VMState> states_;
  std::uint64_t j_ = 0;
};

}  // namespace lts
