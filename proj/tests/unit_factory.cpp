#include "doctest.h"
#include "lts/factory.hpp"
#include "trace_gen.hpp"

using namespace lts;

TEST_CASE("factory: names round trip") {
  for (auto v : {Variant::Basic, Variant::Refined, Variant::WorstCase, Variant::Sparse, Variant::Dense,
                 Variant::SuperNode, Variant::Restart, Variant::Trailing, Variant::Uniform})
    CHECK(parse_variant(variant_name(v)) == v);
  CHECK_THROWS_AS(parse_variant("fast"), BadRequest);
  CHECK(lg_ceil(1) == 0);
  CHECK(lg_ceil(2) == 1);
  CHECK(lg_ceil(4095) == 12);
  CHECK(lg_ceil(4096) == 12);
  CHECK(lg_ceil(4097) == 13);
}

TEST_CASE("factory: every variant follows the position model within its cap") {
  for (auto v : {Variant::Basic, Variant::Refined, Variant::WorstCase, Variant::Sparse, Variant::Dense,
                 Variant::SuperNode, Variant::Restart, Variant::Trailing, Variant::Uniform}) {
    for (std::uint64_t n : {2ull, 9ull, 257ull, 1000ull}) {
      CAPTURE(variant_name(v));
      CAPTURE(n);
      auto data = testgen::random_payloads(n + 1, n);
      VectorProvider<std::uint64_t> pv(data);
      std::uint32_t k = n >= 9 ? 3 : 2;
      auto t = make_traverser(v, pv, {n, k, 0.2});
      auto cap = pebble_cap(v, n, k);
      Position pos = 1;
      TraceHooks h;
      h.on_query = [&](const TraceOp& op, const QueryHandle& q) {
        CHECK(pv.payload(q.pebble) == data[pos - op.arg - 1]);
      };
      h.after_op = [&](const TraceOp& op, std::uint64_t steps, Position) {
        if (op.op == 'F') {
          ++pos;
          CHECK(steps == 1);
        } else if (op.op == 'B') {
          --pos;
        }
        REQUIRE(t->position() == pos);
        CHECK(pv.payload(t->current()) == data[pos - 1]);
        if (cap) CHECK(pv.counters().pebbles_now <= *cap);
      };
      run_trace(*t, testgen::random_trace(n * 31 + k, n, 3000), h);
    }
  }
}

TEST_CASE("factory: length required except for unbounded variants") {
  VectorProvider<int> pv(std::vector<int>(4, 0));
  CHECK_THROWS_AS(make_traverser(Variant::Refined, pv, {0, 2, 0.1}), BadRequest);
  CHECK_NOTHROW(make_traverser(Variant::Restart, pv, {0, 2, 0.1}));
}
