#include <cmath>

#include "doctest.h"
#include "lts/baselines.hpp"
#include "lts/kary.hpp"
#include "trace_gen.hpp"

using namespace lts;

TEST_CASE("kary: configuration") {
  VectorProvider<int> pv(std::vector<int>(4096, 0));
  KaryPebbler t(pv, 4096, 3, KaryMode::Sparse);
  CHECK(t.shape().arity == 16);
  CHECK(t.shape().depth == 3);
  CHECK_THROWS_AS(KaryPebbler(pv, 4096, 1, KaryMode::Sparse), BadRequest);
  CHECK_THROWS_AS(KaryPebbler(pv, 4096, 13, KaryMode::Dense), BadRequest);
}

TEST_CASE("kary: agrees with the restart oracle on random traces") {
  for (auto mode : {KaryMode::Sparse, KaryMode::Dense}) {
    for (std::uint64_t n : {3ull, 17ull, 100ull, 1000ull, 4095ull}) {
      for (std::uint32_t k : {2u, 3u, 4u}) {
        std::uint32_t lg = 0;
        while ((1ull << lg) < n) ++lg;
        if (k > std::max(2u, lg)) continue;
        auto data = testgen::random_payloads(n + k, n);
        CAPTURE(n);
        CAPTURE(k);
        VectorProvider<std::uint64_t> p1(data), p2(data);
        RestartFromHead ref(p1);
        KaryPebbler t(p2, n, k, mode);
        auto ops = testgen::random_trace(n * 31 + k, n, 20000);
        std::uint64_t d = t.shape().arity;
        for (const auto& op : ops) {
          auto before = p2.counters().list_steps;
          if (op.op == 'F') {
            ref.forward();
            t.forward();
            REQUIRE(p2.counters().list_steps - before == 1);
          } else if (op.op == 'B') {
            ref.back();
            t.back();
          } else {
            auto q = t.back_query(op.arg);
            REQUIRE(p2.payload(q.pebble) == data[ref.position() - op.arg - 1]);
            t.end_query(q);
          }
          REQUIRE(t.position() == ref.position());
          REQUIRE(p2.payload(t.current()) == data[t.position() - 1]);
          t.check();
          if (op.op != 'Q') {
            if (mode == KaryMode::Sparse) REQUIRE(p2.counters().pebbles_now <= 3 * k);
            if (mode == KaryMode::Dense) REQUIRE(p2.counters().pebbles_now <= 2 * k * d);
          }
        }
      }
    }
  }
}

TEST_CASE("kary: full back traversal cost by k") {
  const std::uint64_t n = 4096;
  for (auto mode : {KaryMode::Sparse, KaryMode::Dense}) {
    for (std::uint32_t k = 2; k <= 12; ++k) {
      VectorProvider<int> pv(std::vector<int>(n, 0));
      KaryPebbler t(pv, n, k, mode);
      while (t.position() < n) t.forward();
      auto before = pv.counters().list_steps;
      while (t.position() > 1) t.back();
      double cost = static_cast<double>(pv.counters().list_steps - before);
      double d = t.shape().arity;
      double norm = mode == KaryMode::Sparse ? k * d * n : k * static_cast<double>(n);
      MESSAGE(std::string(mode == KaryMode::Sparse ? "sparse" : "dense") << " k=" << k << " d=" << d << " cost=" << cost
                                                              << " c=" << cost / norm
                                                              << " pebbles_max=" << pv.counters().pebbles_max);
    }
  }
}
