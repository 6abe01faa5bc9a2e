#pragma once

#include <cstdint>
#include <deque>
#include <list>
#include <vector>

#include "lts/psp.hpp"

namespace lts {

// A released green path. Pebbles run top to bottom along one right subpath;
// get_pebble() takes from the bottom, so what remains is always a prefix.
struct ListRecord {
  std::uint64_t rank = 0;
  std::uint32_t removed = 0;  // pebbles taken since deposit
  std::uint64_t key = 0;      // caller tag, e.g. the subpath's top node
  std::vector<Pebble> pebbles;

  // chain of nonempty records, by rank
  std::uint64_t prev_ne = 0, next_ne = 0;
};

class RecyclingBin {
 public:
  explicit RecyclingBin(std::size_t capacity) : capacity_(capacity) {}

  void put_pebble(Pebble p);
  std::uint64_t put_list(std::uint64_t key, std::vector<Pebble> pebbles);
  // Bag first; otherwise the bottom pebble of the oldest list among those with
  // the fewest removals. Throws InvariantViolation if nothing is left.
  Pebble get_pebble();
  // Removes and returns the newest record.
  ListRecord get_list();
  // Drops bottom pebbles of record `rank` into the bag until at most `keep`
  // remain. Does not count as removals.
  void trim(std::uint64_t rank, std::size_t keep);

  const ListRecord* newest() const { return recs_.empty() ? nullptr : &recs_.back(); }
  const ListRecord* find(std::uint64_t rank) const;
  const std::deque<ListRecord>& records() const { return recs_; }
  std::size_t bag_size() const { return bag_.size(); }
  std::size_t queue_size() const { return recs_.size(); }
  std::size_t total_pebbles() const { return total_; }
  std::size_t capacity() const { return capacity_; }
  // removal counters, oldest to newest, nonempty records only
  std::vector<std::uint32_t> removal_sequence() const;
  std::uint32_t max_pointer_updates() const { return max_updates_; }
  // O(queue) consistency check for tests and debug builds
  void check() const;

 private:
  struct Bucket {
    std::uint32_t removed;
    std::uint64_t farthest;  // oldest nonempty record with this count
  };

  ListRecord& at(std::uint64_t rank) { return recs_[rank - first_rank_]; }
  const ListRecord& at(std::uint64_t rank) const { return recs_[rank - first_rank_]; }
  // Leave the nonempty chain and the bucket structure.
  void unlink(std::uint64_t rank);
  void note(std::uint32_t updates);

  std::size_t capacity_;
  std::size_t total_ = 0;
  std::vector<Pebble> bag_;
  std::deque<ListRecord> recs_;
  std::uint64_t first_rank_ = 1;
  std::uint64_t next_rank_ = 1;
  std::uint64_t newest_ne_ = 0;  // 0 = none
  std::list<Bucket> buckets_;    // increasing count, so front is the minimum
  std::uint32_t max_updates_ = 0;
};

}  // namespace lts
