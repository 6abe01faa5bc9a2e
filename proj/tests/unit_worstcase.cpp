#include <cmath>

#include "doctest.h"
#include "lts/baselines.hpp"
#include "lts/worstcase.hpp"
#include "trace_gen.hpp"

using namespace lts;

namespace {

std::uint64_t ceil_lg(std::uint64_t n) {
  std::uint64_t k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

TEST_CASE("worstcase: full back traversal per-step bound") {
  for (std::uint32_t j = 2; j <= 14; ++j) {
    const std::uint64_t n = std::uint64_t{1} << j;
    VectorProvider<std::uint32_t> pv([&] {
      std::vector<std::uint32_t> v(n);
      for (std::uint64_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(i + 1);
      return v;
    }());
    WorstCasePebbler t(pv, n);
    for (std::uint64_t i = 1; i < n; ++i) {
      auto before = pv.counters().list_steps;
      t.forward();
      REQUIRE(pv.counters().list_steps - before == 1);
    }
    double worst = -100;
    for (std::uint64_t i = 1; i < n; ++i) {
      auto before = pv.counters().list_steps;
      t.back();
      double cost = static_cast<double>(pv.counters().list_steps - before);
      REQUIRE(pv.payload(t.current()) == n - i);
      REQUIRE(cost <= std::log2(static_cast<double>(i)) + 7);
      worst = std::max(worst, cost - std::log2(static_cast<double>(i)));
      if (j <= 8) t.check();
    }
    const std::uint64_t L = ceil_lg(n);
    CHECK(pv.counters().pebbles_max <= L + 3);
    CHECK(t.stats().reds_max <= L / 2 + 1);
    CHECK(t.stats().greens_max <= L);
    CHECK(t.stats().mutations_max <= 5);
    if (n >= 16) CHECK(t.stats().bits_max <= pebble_tree_bit_cap(n));
    if (j == 14) MESSAGE("worst excess over lg i: " << worst << ", forward mutations max " << t.stats().mutations_max);
  }
}

TEST_CASE("worstcase: agrees with the restart oracle on random traces") {
  for (std::uint64_t n : {2ull, 3ull, 7ull, 8ull, 100ull, 1000ull, 4095ull}) {
    auto data = testgen::random_payloads(n, n);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      CAPTURE(n);
      CAPTURE(seed);
      VectorProvider<std::uint64_t> p1(data), p2(data);
      RestartFromHead ref(p1);
      WorstCasePebbler t(p2, n);
      auto ops = testgen::random_trace(seed * 1000 + n, n, 20000);
      const std::uint64_t L = ceil_lg(n);
      Position far = 1;
      double worst = 0;
      for (const auto& op : ops) {
        auto before = p2.counters().list_steps;
        if (op.op == 'F') {
          ref.forward();
          t.forward();
          REQUIRE(p2.counters().list_steps - before == 1);
          far = std::max(far, t.position());
        } else if (op.op == 'B') {
          Position i = far - t.position() + 1;
          ref.back();
          t.back();
          auto cost = p2.counters().list_steps - before;
          // interleaved traces are held to the tree height, not to lg i
          REQUIRE(cost <= L + 7);
          worst = std::max(worst, static_cast<double>(cost) - std::log2(static_cast<double>(i)));
        } else {
          auto q = t.back_query(op.arg);
          REQUIRE(p2.payload(q.pebble) == data[ref.position() - op.arg - 1]);
          t.end_query(q);
        }
        REQUIRE(t.position() == ref.position());
        REQUIRE(p2.payload(t.current()) == data[t.position() - 1]);
        t.check();
        if (op.op != 'Q') REQUIRE(p2.counters().pebbles_now <= L + 3 + (n < 8 ? 1 : 0));
        REQUIRE(t.red_count() <= L / 2 + 1);
        REQUIRE(t.green_count() <= std::max<std::uint64_t>(L, 1));
      }
      if (n == 4095 && seed == 1) MESSAGE("interleaved worst excess over lg i: " << worst);
      CHECK(t.stats().mutations_max <= 5);
    }
  }
}

TEST_CASE("worstcase: growth") {
  VectorProvider<int> pv([] {
    std::vector<int> v(40);
    for (int i = 0; i < 40; ++i) v[i] = i + 1;
    return v;
  }());
  WorstCasePebbler t(pv, 7);
  for (int i = 0; i < 6; ++i) t.forward();
  CHECK(t.position() == 7);
  CHECK(t.height() == 3);
  t.forward();
  CHECK(t.height() == 4);
  CHECK(t.position() == 8);
  std::vector<Position> nodes;
  for (auto [node, at] : t.blue_nodes()) nodes.push_back(node);
  CHECK(nodes == std::vector<Position>{1, 6, 8});  // run starts of [1, 2, 6, 8]
  t.check();
  while (t.position() < 31) t.forward();
  t.forward();
  CHECK(t.height() == 6);
  while (t.position() > 1) {
    t.back();
    REQUIRE(pv.payload(t.current()) == static_cast<int>(t.position()));
    t.check();
  }
}

TEST_CASE("worstcase: unbounded start and shrinking back") {
  GeneratedProvider<std::uint64_t> pv(0, [](const std::uint64_t& x) { return x + 1; });
  WorstCasePebbler t(pv, 0);
  const std::uint64_t far = 1 << 16;
  while (t.position() < far) t.forward();
  CHECK(pv.payload(t.current()) == far - 1);
  while (t.position() > 100) t.back();
  t.check();
  MESSAGE("pebbles at position 100 after visiting 2^16: " << pv.counters().pebbles_now);
  CHECK(pv.counters().pebbles_now <= 3 * 7);
  while (t.position() > 2) t.back();
  CHECK(pv.counters().pebbles_now <= 4);
  t.back();
  CHECK(pv.payload(t.current()) == 0);
}
