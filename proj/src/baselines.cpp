#include "lts/baselines.hpp"

namespace lts {

Pebble oracle_back(Provider& pv, Pebble cur) {
  Position c = pv.position(cur);
  if (c <= 1) throw BadRequest("position 1 has no predecessor");
  Pebble w = pv.head();
  while (pv.position(w) < c - 1) pv.advance(w);
  return w;
}

RestartFromHead::RestartFromHead(Provider& pv) : pv_(pv), head_(pv.head()), cur_(pv.duplicate(head_)) {}

void RestartFromHead::forward() { pv_.advance(cur_); }

void RestartFromHead::back() {
  Position c = position();
  if (c <= 1) throw BadRequest("back step at position 1");
  Pebble w = pv_.duplicate(head_);
  while (pv_.position(w) < c - 1) pv_.advance(w);
  pv_.release(cur_);
  cur_ = w;
}

void RestartFromHead::pebbled(std::vector<Pebble>& out) const { out = {head_, cur_}; }

TrailingAll::TrailingAll(Provider& pv) : pv_(pv) { trail_.push_back(pv.head()); }

void TrailingAll::forward() {
  Pebble p = pv_.duplicate(trail_.back());
  try {
    pv_.advance(p);
  } catch (...) {
    pv_.release(p);
    throw;
  }
  trail_.push_back(p);
}

void TrailingAll::back() {
  if (trail_.size() <= 1) throw BadRequest("back step at position 1");
  pv_.release(trail_.back());
  trail_.pop_back();
}

UniformK::UniformK(Provider& pv, std::uint64_t n, std::uint32_t k) : pv_(pv) {
  if (k < 1) throw BadRequest("uniform baseline needs k >= 1");
  stride_ = (n + k - 1) / k;
  if (stride_ == 0) stride_ = 1;
  anchors_.push_back(pv.head());
  cur_ = pv.duplicate(anchors_[0]);
}

void UniformK::forward() {
  pv_.advance(cur_);
  Position c = position();
  if ((c - 1) % stride_ == 0 && (c - 1) / stride_ == anchors_.size()) anchors_.push_back(pv_.duplicate(cur_));
}

void UniformK::back() {
  Position c = position();
  if (c <= 1) throw BadRequest("back step at position 1");
  std::size_t m = (c - 2) / stride_;
  Pebble w = pv_.duplicate(anchors_[m]);
  while (pv_.position(w) < c - 1) pv_.advance(w);
  pv_.release(cur_);
  cur_ = w;
}

void UniformK::pebbled(std::vector<Pebble>& out) const {
  out = anchors_;
  out.push_back(cur_);
}

namespace {

// The recursion works on nominal positions; nominal 0 is the slot before the
// head and is carried by a pebble sitting on the head.
struct SkelRun {
  Provider& pv;
  const std::function<void(Position, Pebble)>& visit;
  SkeletonLog& log;

  void see(Position at, Pebble p) {
    if (at == 0) return;
    log.visited.push_back(at);
    if (visit) visit(at, p);
  }

  void track() {
    if (pv.counters().pebbles_now > log.pebbles_max) log.pebbles_max = pv.counters().pebbles_now;
  }

  // Visits base+len-1 down to base. `p` carries base and is consumed.
  void rev(Pebble p, Position base, std::uint64_t len) {
    if (len == 1) {
      track();
      see(base, p);
      pv.release(p);
      return;
    }
    std::size_t lg = 0;
    while ((std::uint64_t{1} << lg) < len) ++lg;
    std::vector<Pebble> ptr(lg + 1, kNoPebble);
    ptr[lg] = p;
    Pebble w = pv.duplicate(p);
    for (std::size_t i = lg; i-- > 0;) {
      Position at = base + len - (std::uint64_t{1} << i);
      while (pv.position(w) < at) pv.advance(w);
      ptr[i] = pv.duplicate(w);
    }
    pv.release(w);
    descend(ptr, base + len);
  }

  // ptr[i] carries top - 2^i. Visits top-1 down to the nominal of ptr.back().
  void descend(std::vector<Pebble>& ptr, Position top) {
    track();
    see(top - 1, ptr[0]);
    pv.release(ptr[0]);
    for (std::size_t i = 1; i < ptr.size(); ++i) {
      std::uint64_t seg = std::uint64_t{1} << (i - 1);
      rev(ptr[i], top - (std::uint64_t{1} << i), seg);
    }
  }
};

}  // namespace

Skeleton skeleton_build(Provider& pv, std::uint64_t n) {
  if (n == 0 || (n & (n - 1)) != 0) throw BadRequest("skeleton size must be a power of 2");
  Skeleton sk;
  sk.pv = &pv;
  sk.n = n;
  std::size_t lg = 0;
  while ((std::uint64_t{1} << lg) < n) ++lg;
  sk.ptr.assign(lg + 1, kNoPebble);
  Pebble w = pv.head();
  sk.ptr[lg] = pv.duplicate(w);  // nominal 0, sits on the head
  for (std::size_t i = lg; i-- > 0;) {
    Position at = n - (std::uint64_t{1} << i);
    while (pv.position(w) < at) pv.advance(w);
    sk.ptr[i] = pv.duplicate(w);
  }
  while (pv.position(w) < n) pv.advance(w);
  sk.cur = w;
  return sk;
}

SkeletonLog skeleton_back_all(Skeleton& sk, const std::function<void(Position, Pebble)>& visit) {
  Provider& pv = *sk.pv;
  SkeletonLog log;
  std::uint64_t start = pv.counters().list_steps;
  SkelRun run{pv, visit, log};
  run.track();
  pv.release(sk.cur);
  sk.cur = kNoPebble;
  if (sk.n == 1) {
    pv.release(sk.ptr[0]);
  } else {
    run.descend(sk.ptr, sk.n);
  }
  sk.ptr.clear();
  log.list_steps = pv.counters().list_steps - start;
  return log;
}

}  // namespace lts
