#include "lts/recycling_bin.hpp"

namespace lts {

void RecyclingBin::note(std::uint32_t updates) {
  if (updates > max_updates_) max_updates_ = updates;
}

void RecyclingBin::put_pebble(Pebble p) {
  bag_.push_back(p);
  ++total_;
  LTS_CHECK(total_ <= capacity_, "recycling bin over capacity");
}

std::uint64_t RecyclingBin::put_list(std::uint64_t key, std::vector<Pebble> pebbles) {
  if (recs_.empty()) first_rank_ = next_rank_;
  ListRecord r;
  r.rank = next_rank_++;
  r.key = key;
  r.pebbles = std::move(pebbles);
  total_ += r.pebbles.size();
  LTS_CHECK(total_ <= capacity_, "recycling bin over capacity");
  recs_.push_back(std::move(r));
  ListRecord& rec = recs_.back();
  if (rec.pebbles.empty()) return rec.rank;

  rec.prev_ne = newest_ne_;
  if (newest_ne_) at(newest_ne_).next_ne = rec.rank;
  newest_ne_ = rec.rank;
  std::uint32_t updates = 1;
  if (buckets_.empty() || buckets_.front().removed != 0) {
    buckets_.push_front({0, rec.rank});
    ++updates;
  }
  note(updates);
  return rec.rank;
}

void RecyclingBin::unlink(std::uint64_t rank) {
  ListRecord& r = at(rank);
  std::uint32_t updates = 0;
  // bucket holding r: counts are contiguous, so scan is over distinct counts
  for (auto it = buckets_.begin(); it != buckets_.end(); ++it) {
    if (it->removed != r.removed) continue;
    if (it->farthest == rank) {
      if (r.next_ne && at(r.next_ne).removed == r.removed)
        it->farthest = r.next_ne;
      else
        buckets_.erase(it);
      ++updates;
    }
    break;
  }
  if (r.prev_ne) at(r.prev_ne).next_ne = r.next_ne;
  if (r.next_ne)
    at(r.next_ne).prev_ne = r.prev_ne;
  else
    newest_ne_ = r.prev_ne;
  r.prev_ne = r.next_ne = 0;
  note(updates + 2);
}

Pebble RecyclingBin::get_pebble() {
  if (!bag_.empty()) {
    Pebble p = bag_.back();
    bag_.pop_back();
    --total_;
    return p;
  }
  LTS_CHECK(!buckets_.empty(), "recycling bin empty");
  auto b = buckets_.begin();
  const std::uint64_t rank = b->farthest;
  ListRecord& r = at(rank);
  Pebble p = r.pebbles.back();
  r.pebbles.pop_back();
  --total_;
  if (r.pebbles.empty()) {
    unlink(rank);
    ++r.removed;
    return p;
  }
  std::uint32_t updates = 0;
  const std::uint32_t m = r.removed;
  ++r.removed;
  // r leaves bucket m; the next newer list with count m takes over, if any
  if (r.next_ne && at(r.next_ne).removed == m) {
    b->farthest = r.next_ne;
    ++b;
  } else {
    b = buckets_.erase(b);
  }
  ++updates;
  // r is newer than every list already counted m+1, so it only founds a bucket
  if (b == buckets_.end() || b->removed != m + 1) {
    buckets_.insert(b, {m + 1, rank});
    ++updates;
  }
  note(updates);
  return p;
}

ListRecord RecyclingBin::get_list() {
  LTS_CHECK(!recs_.empty(), "recycling bin has no list");
  const std::uint64_t rank = recs_.back().rank;
  if (!recs_.back().pebbles.empty()) unlink(rank);
  ListRecord out = std::move(recs_.back());
  recs_.pop_back();
  next_rank_ = out.rank;
  total_ -= out.pebbles.size();
  return out;
}

void RecyclingBin::trim(std::uint64_t rank, std::size_t keep) {
  ListRecord& r = at(rank);
  if (r.pebbles.size() <= keep) return;
  while (r.pebbles.size() > keep) {
    bag_.push_back(r.pebbles.back());
    r.pebbles.pop_back();
  }
  if (r.pebbles.empty()) unlink(rank);
}

const ListRecord* RecyclingBin::find(std::uint64_t rank) const {
  if (recs_.empty() || rank < first_rank_ || rank >= first_rank_ + recs_.size()) return nullptr;
  return &at(rank);
}

std::vector<std::uint32_t> RecyclingBin::removal_sequence() const {
  std::vector<std::uint32_t> out;
  for (const auto& r : recs_)
    if (!r.pebbles.empty()) out.push_back(r.removed);
  return out;
}

void RecyclingBin::check() const {
  std::size_t n = bag_.size();
  std::uint64_t prev = 0;
  bool first = true;
  std::uint32_t last_m = 0;
  std::vector<Bucket> expect;  // oldest first
  for (const auto& r : recs_) {
    n += r.pebbles.size();
    if (r.pebbles.empty()) continue;
    LTS_CHECK(r.prev_ne == prev, "nonempty chain broken");
    LTS_CHECK(first || r.removed <= last_m, "removal counts increase toward newer lists");
    if (first || r.removed != last_m) expect.push_back({r.removed, r.rank});
    first = false;
    last_m = r.removed;
    prev = r.rank;
  }
  LTS_CHECK(prev == newest_ne_, "newest nonempty record mismatch");
  LTS_CHECK(n == total_, "pebble count mismatch");
  LTS_CHECK(expect.size() == buckets_.size(), "bucket count mismatch");
  auto it = buckets_.begin();
  for (auto e = expect.rbegin(); e != expect.rend(); ++e, ++it)
    LTS_CHECK(it->removed == e->removed && it->farthest == e->farthest, "bucket pointer mismatch");
}

}  // namespace lts
