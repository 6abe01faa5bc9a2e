#include <random>

#include "doctest.h"
#include "lts/recycling_bin.hpp"

using namespace lts;

namespace {

// Straightforward model: linear scans everywhere.
struct ModelBin {
  struct Rec {
    std::uint32_t removed = 0;
    std::vector<Pebble> pebbles;
  };
  std::vector<Pebble> bag;
  std::vector<Rec> recs;

  Pebble get_pebble() {
    if (!bag.empty()) {
      Pebble p = bag.back();
      bag.pop_back();
      return p;
    }
    Rec* best = nullptr;
    for (auto& r : recs)
      if (!r.pebbles.empty() && (!best || r.removed < best->removed)) best = &r;
    REQUIRE(best);
    Pebble p = best->pebbles.back();
    best->pebbles.pop_back();
    ++best->removed;
    return p;
  }
};

}  // namespace

TEST_CASE("recycling bin: removal order examples") {
  RecyclingBin rb(64);
  Pebble next = 0;
  auto list = [&](int k) {
    std::vector<Pebble> v;
    for (int i = 0; i < k; ++i) v.push_back(next++);
    return v;
  };
  rb.put_list(1, list(5));
  rb.get_pebble();
  rb.get_pebble();
  rb.put_list(2, list(3));
  rb.get_pebble();
  rb.put_list(3, list(3));
  rb.get_pebble();
  rb.put_list(4, list(3));
  CHECK(rb.removal_sequence() == std::vector<std::uint32_t>{2, 1, 1, 0});
  rb.get_pebble();
  CHECK(rb.removal_sequence() == std::vector<std::uint32_t>{2, 1, 1, 1});
  rb.get_pebble();
  CHECK(rb.removal_sequence() == std::vector<std::uint32_t>{2, 2, 1, 1});
  rb.check();

  auto top = rb.get_list();
  CHECK(top.key == 4);
  CHECK(top.removed == 1);
  CHECK(top.pebbles.size() == 2);
  rb.check();
}

TEST_CASE("recycling bin: bag is LIFO and lists come back newest first") {
  RecyclingBin rb(8);
  rb.put_pebble(7);
  CHECK(rb.bag_size() == 1);
  CHECK(rb.get_pebble() == 7);
  rb.put_list(10, {1, 2});
  rb.put_list(11, {3});
  auto b = rb.get_list();
  CHECK(b.key == 11);
  CHECK(b.removed == 0);
  auto a = rb.get_list();
  CHECK(a.key == 10);
  CHECK_THROWS_AS(rb.get_list(), InvariantViolation);
  CHECK_THROWS_AS(rb.get_pebble(), InvariantViolation);
  for (Pebble p = 0; p < 8; ++p) rb.put_pebble(p);
  CHECK_THROWS_AS(rb.put_pebble(8), InvariantViolation);
}

TEST_CASE("recycling bin: matches the model on random operation mixes") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    std::mt19937_64 rng(seed);
    RecyclingBin rb(1 << 20);
    ModelBin model;
    Pebble next = 0;
    for (int step = 0; step < 4000; ++step) {
      int op = static_cast<int>(rng() % 10);
      if (op < 2) {
        model.bag.push_back(next);
        rb.put_pebble(next++);
      } else if (op < 5) {
        std::vector<Pebble> v(rng() % 6);
        for (auto& p : v) p = next++;
        model.recs.push_back({0, v});
        rb.put_list(step, v);
      } else if (op < 9) {
        std::size_t live = model.bag.size();
        for (auto& r : model.recs) live += r.pebbles.size();
        if (live == 0) continue;
        REQUIRE(rb.get_pebble() == model.get_pebble());
      } else if (op == 9 && !model.recs.empty()) {
        if (rng() % 2) {
          auto r = rb.get_list();
          REQUIRE(r.pebbles == model.recs.back().pebbles);
          REQUIRE(r.removed == model.recs.back().removed);
          model.recs.pop_back();
        } else {
          std::size_t i = rng() % model.recs.size();
          std::size_t keep = rng() % 3;
          auto& mr = model.recs[i];
          while (mr.pebbles.size() > keep) {
            model.bag.push_back(mr.pebbles.back());
            mr.pebbles.pop_back();
          }
          rb.trim(rb.newest()->rank - (model.recs.size() - 1 - i), keep);
        }
      }
      rb.check();
    }
    CHECK(rb.max_pointer_updates() <= 4);
  }
}
