#include <cmath>

#include "doctest.h"
#include "lts/amortized.hpp"
#include "lts/baselines.hpp"
#include "trace_gen.hpp"

using namespace lts;

namespace {

std::uint32_t ceil_lg(std::uint64_t n) {
  std::uint32_t k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

std::vector<Position> blue_positions(AmortizedPebbler& t) {
  std::vector<Pebble> ps;
  t.pebbled(ps);
  std::vector<Position> out;
  auto nodes = blue_path(t.shape(), node_at(t.shape(), t.position()));
  for (std::size_t i = 0; i < nodes.size(); ++i) out.push_back(t.provider().position(ps[i]));
  return out;
}

}  // namespace

TEST_CASE("amortized: small tree walk-through") {
  for (auto var : {AmortizedVariant::Basic, AmortizedVariant::Refined}) {
    CAPTURE(static_cast<int>(var));
    VectorProvider<int> pv({10, 20, 30, 40, 50, 60, 70});
    AmortizedPebbler t(pv, 7, var);
    CHECK(t.position() == 1);
    CHECK(pv.counters().list_steps == 0);
    if (var == AmortizedVariant::Basic) CHECK(pv.counters().pebbles_now == 1);
    if (var == AmortizedVariant::Refined) CHECK(pv.counters().pebbles_now == 2 * 3);
    t.forward();
    CHECK(blue_positions(t) == std::vector<Position>{1, 2});
    t.forward();
    t.forward();
    CHECK(t.position() == 4);
    t.forward();
    CHECK(t.position() == 5);
    CHECK(blue_positions(t) == std::vector<Position>{1, 5});
    t.check();
    auto before = pv.counters().list_steps;
    t.back();
    CHECK(t.position() == 4);
    CHECK(pv.counters().list_steps == before);
    t.forward();
    t.forward();
    t.forward();
    CHECK(t.position() == 7);
    CHECK_THROWS_AS(t.forward(), EndOfList);
    CHECK(pv.payload(t.current()) == 70);
  }
  VectorProvider<int> pv({1, 2, 3, 4, 5, 6, 7});
  AmortizedPebbler t(pv, 7, AmortizedVariant::Basic);
  for (int i = 0; i < 6; ++i) t.forward();
  CHECK(pv.counters().list_steps == 6);
  t.back();
  t.back();
  t.back();
  CHECK(t.position() == 4);
  for (int i = 0; i < 3; ++i) t.back();
  CHECK(t.position() == 1);
  CHECK_THROWS_AS(t.back(), BadRequest);
}

TEST_CASE("amortized: agrees with the restart oracle on random traces") {
  for (auto var : {AmortizedVariant::Basic, AmortizedVariant::Refined}) {
    for (std::uint64_t n : {2ull, 3ull, 8ull, 100ull, 513ull, 4095ull}) {
      auto data = testgen::random_payloads(n, n);
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        CAPTURE(n);
        CAPTURE(seed);
        VectorProvider<std::uint64_t> p1(data), p2(data);
        RestartFromHead ref(p1);
        AmortizedPebbler t(p2, n, var);
        auto ops = testgen::random_trace(seed * 77 + n, n, n < 200 ? 4000 : 20000);
        const std::uint32_t L = ceil_lg(n);
        std::size_t steps = 0;
        for (const auto& op : ops) {
          if (op.op == 'F') { ref.forward(); t.forward(); }
          else if (op.op == 'B') { ref.back(); t.back(); }
          else {
            auto q = t.back_query(op.arg);
            REQUIRE(p2.payload(q.pebble) == data[ref.position() - op.arg - 1]);
            t.end_query(q);
          }
          REQUIRE(t.position() == ref.position());
          REQUIRE(p2.payload(t.current()) == data[t.position() - 1]);
          if (++steps % 7 == 0 || n < 200) t.check();
          REQUIRE(t.green_count() <= (var == AmortizedVariant::Refined ? t.shape().depth + 1 : 1u << 20));
        }
        if (var == AmortizedVariant::Basic) CHECK(t.in_use_max() <= L * L + 2);
        // a query may hold one spare beyond the pool while the bag is empty
        if (var == AmortizedVariant::Refined) CHECK(p2.counters().pebbles_max <= std::max(2u, 2 * L));
      }
    }
  }
}

TEST_CASE("amortized: full back traversal cost") {
  for (auto var : {AmortizedVariant::Basic, AmortizedVariant::Refined}) {
    double worst = 0;
    for (std::uint32_t j = 1; j <= 12; ++j) {
      std::uint64_t n = std::uint64_t{1} << j;
      VectorProvider<int> pv(std::vector<int>(n, 0));
      AmortizedPebbler t(pv, n, var);
      while (t.position() < n) t.forward();
      auto before = pv.counters().list_steps;
      while (t.position() > 1) t.back();
      auto cost = pv.counters().list_steps - before;
      CHECK(cost <= j * n);
      if (var == AmortizedVariant::Refined) CHECK(pv.counters().pebbles_max <= std::max(2u, 2 * j));
      worst = std::max(worst, static_cast<double>(cost) / (static_cast<double>(n) * j));
    }
    MESSAGE("worst back cost / (n lg n) = " << worst);
    // partial lengths inside one tree
    std::uint64_t n = 4095;
    for (std::uint64_t m : {17ull, 100ull, 1000ull, 2049ull, 4095ull}) {
      VectorProvider<int> pv(std::vector<int>(n, 0));
      AmortizedPebbler t(pv, n, var);
      while (t.position() < m) t.forward();
      auto before = pv.counters().list_steps;
      while (t.position() > 1) t.back();
      double per = static_cast<double>(pv.counters().list_steps - before) / static_cast<double>(m - 1);
      CHECK(per <= 1.0 * std::log2(static_cast<double>(m)) + 2);
    }
  }
}
