#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lts {

using Position = std::uint64_t;
using Pebble = std::uint32_t;
inline constexpr Pebble kNoPebble = 0xffffffffu;

enum class Color : std::uint8_t { Blue, Green, Red };

struct StepCounters {
  std::uint64_t list_steps = 0;
  std::uint64_t pebbles_now = 0;
  std::uint64_t pebbles_max = 0;
  std::uint64_t per_op_worst = 0;
};

struct EndOfList : std::runtime_error {
  explicit EndOfList(Position p) : std::runtime_error("end of list at position " + std::to_string(p)) {}
};

// A bound or structural invariant failed. The CLI maps this to exit code 3.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Raised for requests that are invalid for the current state (stepping back
// from the head, bad arguments). The CLI maps this to exit code 2; trace
// moves outside the list are caught before they get here and exit 3.
struct BadRequest : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

#define LTS_CHECK(cond, msg)                                   \
  do {                                                         \
    if (!(cond)) throw ::lts::InvariantViolation(msg);         \
  } while (0)

// Pointer service provider. Synopsis code only ever holds Pebble handles and
// moves them forward one node at a time through advance().
class Provider {
 public:
  virtual ~Provider() = default;

  Pebble head();
  void advance(Pebble p);
  Pebble duplicate(Pebble p);
  // Make dst point where src points. Free, like duplicate.
  void assign(Pebble dst, Pebble src);
  void release(Pebble p);
  Position position(Pebble p) const { return pos_[p]; }
  bool live(Pebble p) const { return p < pos_.size() && pos_[p] != 0; }

  const StepCounters& counters() const { return ctr_; }
  // Synopses report the list-steps charged to one back-step here.
  void note_back_cost(std::uint64_t steps) {
    if (steps > ctr_.per_op_worst) ctr_.per_op_worst = steps;
  }

  virtual std::optional<Position> length() const = 0;

 protected:
  virtual void on_head(Pebble slot) = 0;
  virtual void on_advance(Pebble slot, Position from) = 0;
  virtual void on_copy(Pebble dst, Pebble src) = 0;
  virtual void on_release(Pebble) {}

 private:
  Pebble alloc();

  std::vector<Position> pos_;  // 0 marks a free slot
  std::vector<Pebble> free_;
  StepCounters ctr_;
};

// Fixed list backed by a vector of payloads; position p carries data[p-1].
template <class T>
class VectorProvider final : public Provider {
 public:
  explicit VectorProvider(std::vector<T> data) : data_(std::move(data)) {
    if (data_.empty()) throw BadRequest("vector_provider needs a non-empty sequence");
  }
  const T& payload(Pebble p) const { return data_[position(p) - 1]; }
  std::optional<Position> length() const override { return data_.size(); }

 protected:
  void on_head(Pebble) override {}
  void on_advance(Pebble, Position from) override {
    if (from >= data_.size()) throw EndOfList(from);
  }
  void on_copy(Pebble, Pebble) override {}

 private:
  std::vector<T> data_;
};

// Unbounded list whose node p holds step applied (p-1) times to the seed.
// Each evaluation of step is counted separately from list-steps so callers
// can report hash evaluations or VM re-steps.
template <class T>
class GeneratedProvider final : public Provider {
 public:
  using StepFn = std::function<T(const T&)>;
  GeneratedProvider(T seed, StepFn step) : seed_(std::move(seed)), step_(std::move(step)) {}

  const T& payload(Pebble p) const { return state_[p]; }
  std::uint64_t evaluations() const { return evals_; }
  std::optional<Position> length() const override { return std::nullopt; }

  // The next advance that lands on `at` copies `value` instead of calling step.
  // Used when the caller already holds the successor state.
  void offer(Position at, const T& value) {
    offer_at_ = at;
    offer_ = value;
  }

 protected:
  void on_head(Pebble slot) override { grow(slot) = seed_; }
  void on_advance(Pebble slot, Position from) override {
    if (offer_at_ == from + 1) {
      state_[slot] = offer_;
      offer_at_ = 0;
      return;
    }
    state_[slot] = step_(state_[slot]);
    ++evals_;
  }
  void on_copy(Pebble dst, Pebble src) override {
    grow(dst);  // may reallocate; index src only afterwards
    state_[dst] = state_[src];
  }

 private:
  T& grow(Pebble slot) {
    if (slot >= state_.size()) state_.resize(slot + 1);
    return state_[slot];
  }

  T seed_;
  StepFn step_;
  std::vector<T> state_;
  std::uint64_t evals_ = 0;
  Position offer_at_ = 0;
  T offer_{};
};

}  // namespace lts
