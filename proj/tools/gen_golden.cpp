// Writes the frozen reference files under tests/golden. Values come from the
// first-principles oracles in tests/oracles.hpp and the record-all VM, except
// the trade-off constant, which is a calibration run frozen here.
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lts/hashchain.hpp"
#include "lts/kary.hpp"
#include "lts/rollback.hpp"
#include "oracles.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double back_cost(std::uint64_t n, std::uint32_t k, lts::KaryMode mode) {
  lts::VectorProvider<int> pv(std::vector<int>(n, 0));
  lts::KaryPebbler t(pv, n, k, mode);
  while (t.position() < n) t.forward();
  auto before = pv.counters().list_steps;
  while (t.position() > 1) t.back();
  return static_cast<double>(pv.counters().list_steps - before);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_golden <source dir> <golden dir>\n";
    return 2;
  }
  const std::string src = argv[1], dir = argv[2];

  {
    std::ofstream out(dir + "/vtree.txt");
    out << "# arity depth preorder pred parent (0 = none)\n";
    for (std::uint32_t t = 2; t <= 4; ++t)
      for (std::uint32_t d = 0; d <= 3; ++d) {
        oracle::ExplicitTree ex(t, d);
        for (const auto& node : ex.nodes) {
          std::uint64_t pred = node.pre == 1 ? 0 : ex.pred(node.pre);
          std::uint64_t par = node.parent < 0 ? 0 : ex.nodes[static_cast<std::size_t>(node.parent)].pre;
          out << t << ' ' << d << ' ' << node.pre << ' ' << pred << ' ' << par << '\n';
        }
      }
  }
  {
    std::ofstream out(dir + "/right_sums.txt");
    out << "# depth sum of right-child subtree sizes, full binary tree\n";
    for (std::uint32_t d = 1; d <= 12; ++d) out << d << ' ' << oracle::right_subtree_sum(oracle::ExplicitTree(2, d)) << '\n';
  }
  {
    std::ofstream out(dir + "/fib_vm.txt");
    out << "# script line, state index, state hash after it (record-all reference)\n";
    lts::RecordAllVM ref(lts::assemble(slurp(src + "/data/fib.vm")));
    std::size_t line = 0;
    for (const auto& s : lts::parse_vm_script(slurp(src + "/data/fib.script"))) {
      for (std::uint64_t i = 0; i < s.count; ++i) s.rollback ? ref.rollback() : ref.step();
      out << ++line << ' ' << ref.index() << ' ' << std::hex << lts::state_hash(ref.state()) << std::dec << '\n';
    }
  }
  {
    std::ofstream out(dir + "/toy_chain.txt");
    out << "# toy hash chain from seed 'golden', index value\n";
    lts::Bytes v = "golden";
    for (int i = 0; i < 8; ++i) {
      out << i << ' ' << lts::to_hex(v) << '\n';
      v = lts::toy_hash(v);
    }
  }
  {
    const std::uint64_t n = 4096;
    double sparse = back_cost(n, 2, lts::KaryMode::Sparse) / (2 * std::pow(static_cast<double>(n), 1.5));
    double dense = back_cost(n, 2, lts::KaryMode::Dense) / (2.0 * static_cast<double>(n));
    std::ofstream out(dir + "/tradeoff.txt");
    out << "# n=4096 k=2 calibration: sparse ratio, dense ratio, frozen c (twice the larger)\n";
    out.precision(6);
    out << std::fixed << sparse << ' ' << dense << ' ' << 2 * std::max(sparse, dense) << '\n';
  }
  return 0;
}
