#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lts/psp.hpp"

namespace lts {

// Pebble handed out by back_query. `owned` pebbles must go back through
// end_query; borrowed ones are synopsis pebbles and must not be touched.
struct QueryHandle {
  Pebble pebble = kNoPebble;
  bool owned = false;
};

// Common face of every traversal strategy: one current position that moves
// forward or back by one node.
class Traverser {
 public:
  virtual ~Traverser() = default;

  virtual void forward() = 0;
  virtual void back() = 0;
  virtual Position position() const = 0;
  virtual Pebble current() const = 0;
  virtual Provider& provider() = 0;
  virtual std::string name() const = 0;

  // Read access j nodes behind the current one without moving.
  QueryHandle back_query(Position j);
  void end_query(QueryHandle q);

  // Every pebble the synopsis owns that may serve as a walking origin.
  virtual void pebbled(std::vector<Pebble>& out) const = 0;

 protected:
  // Spare pebble for a query walk. The default duplicates; synopses with an
  // allocator of their own override these.
  virtual Pebble take_spare(Pebble like) { return provider().duplicate(like); }
  virtual void return_spare(Pebble p) { provider().release(p); }
};

struct OpRecord {
  char op = 'F';
  Position position = 0;
  std::uint64_t list_steps_delta = 0;
  std::uint64_t pebbles_now = 0;
};

struct TraceOp {
  char op = 'F';  // F, B or Q
  Position arg = 0;
};

struct TraceResult {
  Position final_position = 0;
  std::uint64_t total_list_steps = 0;
  std::uint64_t pebbles_max = 0;
  std::uint64_t per_back_step_max = 0;
  std::uint64_t back_steps = 0;
  std::vector<OpRecord> log;
};

struct TraceHooks {
  bool keep_log = false;
  // called after each op with the op, the list-steps it used and the
  // farthest position reached so far
  std::function<void(const TraceOp&, std::uint64_t steps, Position farthest)> after_op;
  // called on Q with the handle, before it is returned
  std::function<void(const TraceOp&, const QueryHandle&)> on_query;
};

TraceResult run_trace(Traverser& t, const std::vector<TraceOp>& ops, const TraceHooks& hooks = {});

}  // namespace lts
