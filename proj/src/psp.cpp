#include "lts/psp.hpp"

namespace lts {

Pebble Provider::alloc() {
  Pebble p;
  if (!free_.empty()) {
    p = free_.back();
    free_.pop_back();
  } else {
    p = static_cast<Pebble>(pos_.size());
    pos_.push_back(0);
  }
  if (++ctr_.pebbles_now > ctr_.pebbles_max) ctr_.pebbles_max = ctr_.pebbles_now;
  return p;
}

Pebble Provider::head() {
  Pebble p = alloc();
  pos_[p] = 1;
  on_head(p);
  return p;
}

void Provider::advance(Pebble p) {
  LTS_CHECK(live(p), "advance on a dead pebble");
  on_advance(p, pos_[p]);
  ++pos_[p];
  ++ctr_.list_steps;
}

Pebble Provider::duplicate(Pebble p) {
  LTS_CHECK(live(p), "duplicate of a dead pebble");
  Pebble q = alloc();
  pos_[q] = pos_[p];
  on_copy(q, p);
  return q;
}

void Provider::assign(Pebble dst, Pebble src) {
  LTS_CHECK(live(dst) && live(src), "assign with a dead pebble");
  if (dst == src) return;
  pos_[dst] = pos_[src];
  on_copy(dst, src);
}

void Provider::release(Pebble p) {
  LTS_CHECK(live(p), "double release");
  on_release(p);
  pos_[p] = 0;
  free_.push_back(p);
  --ctr_.pebbles_now;
}

}  // namespace lts
