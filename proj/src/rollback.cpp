#include "lts/rollback.hpp"

namespace lts {

ReversibleVM::ReversibleVM(Program prog, VMState init, RollbackMode mode, std::uint64_t block)
    : prog_(std::move(prog)), mode_(mode), block_(mode == RollbackMode::Delta ? block : 1), live_(init) {
  if (prog_.empty()) throw BadRequest("empty program");
  if (mode_ == RollbackMode::Delta && block_ == 0) throw BadRequest("block length must be positive");
  auto stride = block_;
  pv_ = std::make_unique<GeneratedProvider<VMState>>(init, [this, stride](const VMState& s) {
    VMState t = s;
    for (std::uint64_t i = 0; i < stride; ++i) t = run_one(t);
    return t;
  });
  t_ = std::make_unique<WorstCasePebbler>(*pv_, 0);
}

ReversibleVM::~ReversibleVM() = default;

VMState ReversibleVM::run_one(const VMState& s) {
  ++vm_steps_;
  return vm_step(prog_, s);
}

const VMState& ReversibleVM::state() const {
  return mode_ == RollbackMode::Synopsis ? pv_->payload(t_->current()) : live_;
}

std::size_t ReversibleVM::snapshots_stored() const {
  return pv_->counters().pebbles_now + (mode_ == RollbackMode::Delta ? 1 : 0);
}

std::size_t ReversibleVM::delta_bytes() const {
  std::size_t b = 0;
  for (const auto& d : ring_) b += d.bytes();
  return b;
}

void ReversibleVM::step() {
  if (mode_ == RollbackMode::Synopsis) {
    t_->forward();
    ++j_;
    return;
  }
  VMState next = run_one(live_);
  ring_.push_back(reverse_delta(live_, next));
  if (ring_.size() > block_) ring_.pop_front();
  live_ = std::move(next);
  ++j_;
  if (j_ % block_ == 0) {
    // The synopsis may still sit on this block start after rollbacks served
    // from the ring.
    Position at = j_ / block_ + 1;
    if (t_->position() + 1 == at) {
      pv_->offer(at, live_);
      t_->forward();
    }
    if (t_->position() != at) throw InvariantViolation("block synopsis out of step");
  }
}

void ReversibleVM::rollback() {
  if (j_ == 0) throw BadRequest("rollback at the initial state");
  std::uint64_t before = vm_steps_;
  if (mode_ == RollbackMode::Synopsis) {
    t_->back();
  } else if (!ring_.empty()) {
    apply_delta(live_, ring_.back());
    ring_.pop_back();
  } else {
    std::uint64_t target = j_ - 1;
    Position at = target / block_ + 1;
    while (t_->position() > at) t_->back();
    if (t_->position() != at) throw InvariantViolation("block synopsis behind the live state");
    VMState s = pv_->payload(t_->current());
    for (std::uint64_t i = (at - 1) * block_; i < target; ++i) {
      VMState n = run_one(s);
      ring_.push_back(reverse_delta(s, n));
      s = std::move(n);
    }
    live_ = std::move(s);
  }
  --j_;
  last_resteps_ = vm_steps_ - before;
}

}  // namespace lts
