// Library outputs against the frozen files in tests/golden.
#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lts/hashchain.hpp"
#include "lts/kary.hpp"
#include "lts/rollback.hpp"
#include "lts/vtree.hpp"

using namespace lts;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing " << path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// data lines of a golden file, comments dropped
std::vector<std::string> rows(const std::string& name) {
  std::istringstream in(slurp(std::string(LTS_GOLDEN_DIR) + "/" + name));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  REQUIRE(!out.empty());
  return out;
}

std::string source(const std::string& rel) { return slurp(std::string(LTS_GOLDEN_DIR) + "/../../" + rel); }

}  // namespace

TEST_CASE("golden: vtree predecessor and parent") {
  for (const auto& r : rows("vtree.txt")) {
    std::istringstream ls(r);
    std::uint32_t t, d;
    std::uint64_t x, pred, par;
    ls >> t >> d >> x >> pred >> par;
    TreeShape s = make_shape(t, d);
    NodeId v = node_at(s, x);
    CAPTURE(r);
    if (x == 1) continue;
    CHECK(preorder_pred(s, v).preorder == pred);
    CHECK(parent(s, v).preorder == par);
  }
}

TEST_CASE("golden: right-child subtree sums") {
  for (const auto& r : rows("right_sums.txt")) {
    std::istringstream ls(r);
    std::uint32_t d;
    std::uint64_t sum;
    ls >> d >> sum;
    CHECK(right_child_subtree_sum(make_shape(2, d)) == sum);
  }
}

TEST_CASE("golden: published SHA-256 vectors") {
  for (const auto& r : rows("sha256.txt")) {
    std::istringstream ls(r);
    std::string msg, hex;
    ls >> msg >> hex;
    if (msg == "-") msg.clear();
    CHECK(to_hex(sha256(msg)) == hex);
  }
}

TEST_CASE("golden: toy hash chain") {
  Bytes v = "golden";
  for (const auto& r : rows("toy_chain.txt")) {
    std::istringstream ls(r);
    int i;
    std::string hex;
    ls >> i >> hex;
    CHECK(to_hex(v) == hex);
    v = toy_hash(v);
  }
}

TEST_CASE("golden: fib demo under both rollback modes") {
  Program p = assemble(source("data/fib.vm"));
  auto script = parse_vm_script(source("data/fib.script"));
  auto want = rows("fib_vm.txt");
  REQUIRE(want.size() == script.size());
  for (auto mode : {RollbackMode::Synopsis, RollbackMode::Delta}) {
    ReversibleVM vm(p, {}, mode, 16);
    for (std::size_t i = 0; i < script.size(); ++i) {
      for (std::uint64_t c = 0; c < script[i].count; ++c) script[i].rollback ? vm.rollback() : vm.step();
      std::istringstream ls(want[i]);
      std::size_t line;
      std::uint64_t idx, hash;
      ls >> line >> idx >> std::hex >> hash;
      CHECK(vm.index() == idx);
      CHECK(state_hash(vm.state()) == hash);
    }
  }
}

TEST_CASE("golden: trade-off calibration is reproducible") {
  auto r = rows("tradeoff.txt");
  std::istringstream ls(r[0]);
  double sparse, dense, c;
  ls >> sparse >> dense >> c;
  const std::uint64_t n = 4096;
  for (auto mode : {KaryMode::Sparse, KaryMode::Dense}) {
    VectorProvider<int> pv(std::vector<int>(n, 0));
    KaryPebbler t(pv, n, 2, mode);
    while (t.position() < n) t.forward();
    auto before = pv.counters().list_steps;
    while (t.position() > 1) t.back();
    double cost = static_cast<double>(pv.counters().list_steps - before);
    double ratio = mode == KaryMode::Sparse ? cost / (2 * std::pow(static_cast<double>(n), 1.5)) : cost / (2.0 * n);
    CHECK(ratio == doctest::Approx(mode == KaryMode::Sparse ? sparse : dense).epsilon(1e-5));
  }
  CHECK(c <= 4.0);
}
