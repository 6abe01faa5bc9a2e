#include "lts/traverser.hpp"

namespace lts {

QueryHandle Traverser::back_query(Position j) {
  Position cur = position();
  if (j >= cur) throw BadRequest("back_query distance out of range");
  Position target = cur - j;
  std::vector<Pebble> ps;
  pebbled(ps);
  Pebble best = kNoPebble;
  Position best_pos = 0;
  auto& pv = provider();
  for (Pebble p : ps) {
    Position q = pv.position(p);
    if (q <= target && q > best_pos) {
      best = p;
      best_pos = q;
    }
  }
  LTS_CHECK(best != kNoPebble, "no pebble at or before the query target");
  if (best_pos == target) return {best, false};
  Pebble w = take_spare(best);
  while (pv.position(w) < target) pv.advance(w);
  return {w, true};
}

void Traverser::end_query(QueryHandle q) {
  if (q.owned) return_spare(q.pebble);
}

TraceResult run_trace(Traverser& t, const std::vector<TraceOp>& ops, const TraceHooks& hooks) {
  TraceResult r;
  auto& pv = t.provider();
  Position farthest = t.position();
  for (const auto& op : ops) {
    std::uint64_t before = pv.counters().list_steps;
    switch (op.op) {
      case 'F':
        t.forward();
        if (t.position() > farthest) farthest = t.position();
        break;
      case 'B':
        t.back();
        break;
      case 'Q': {
        auto q = t.back_query(op.arg);
        if (hooks.on_query) hooks.on_query(op, q);
        t.end_query(q);
        break;
      }
      default:
        throw BadRequest(std::string("unknown op ") + op.op);
    }
    std::uint64_t used = pv.counters().list_steps - before;
    if (op.op == 'B') {
      ++r.back_steps;
      if (used > r.per_back_step_max) r.per_back_step_max = used;
      pv.note_back_cost(used);
    }
    if (hooks.after_op) hooks.after_op(op, used, farthest);
    if (hooks.keep_log) r.log.push_back({op.op, t.position(), used, pv.counters().pebbles_now});
  }
  r.final_position = t.position();
  r.total_list_steps = pv.counters().list_steps;
  r.pebbles_max = pv.counters().pebbles_max;
  return r;
}

}  // namespace lts
