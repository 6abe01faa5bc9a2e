// Command-line front end: trace, bench, hashchain, vm.
// Exit codes: 0 ok, 2 bad input, 3 a bound or invariant failed.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lts/factory.hpp"
#include "lts/hashchain.hpp"
#include "lts/rollback.hpp"
#include "lts/trace_script.hpp"

using namespace lts;
using json = nlohmann::ordered_json;

namespace {

constexpr int kBadInput = 2;
constexpr int kViolation = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadRequest("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw BadRequest("cannot write " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::uint64_t> payloads(std::uint64_t n, std::uint64_t seed) {
  std::vector<std::uint64_t> v(n);
  std::uint64_t x = seed;
  for (auto& p : v) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    p = z ^ (z >> 31);
  }
  return v;
}

struct Common {
  std::string variant = "refined";
  std::uint64_t n = 0;
  std::uint32_t k = 2;
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  bool log_ops = false;
  std::string out;
};

int cmd_trace(const std::string& path, const Common& flags, const CLI::App& sub) {
  TraceScript s = parse_trace_script(slurp(path));
  // flags given on the command line win over the script header
  Variant v = parse_variant(sub.count("--variant") || !s.variant ? flags.variant : *s.variant);
  std::uint32_t k = sub.count("--k") || !s.k ? flags.k : *s.k;
  double eps = sub.count("--epsilon") || !s.epsilon ? flags.epsilon : *s.epsilon;
  std::uint64_t seed = sub.count("--seed") || !s.seed ? flags.seed : *s.seed;
  std::optional<std::uint64_t> n = sub.count("--n") ? std::optional(flags.n) : s.n;

  TraceExtent ext = trace_extent(s.ops, n);
  if (ext.bad_op) throw InvariantViolation("op " + std::to_string(ext.bad_op) + ": " + ext.reason);
  std::uint64_t len = n.value_or(ext.farthest);

  auto data = payloads(len, seed);
  VectorProvider<std::uint64_t> pv(data);
  auto t = make_traverser(v, pv, {len, k, eps});
  auto cap = pebble_cap(v, len, k);

  Position pos = 1;
  std::size_t index = 0;
  TraceHooks hooks;
  hooks.keep_log = flags.log_ops;
  hooks.on_query = [&](const TraceOp& op, const QueryHandle& q) {
    if (pv.payload(q.pebble) != data[pos - op.arg - 1])
      throw InvariantViolation("op " + std::to_string(index + 1) + ": query returned the wrong node");
  };
  hooks.after_op = [&](const TraceOp& op, std::uint64_t steps, Position) {
    ++index;
    const std::string at = "op " + std::to_string(index) + ": ";
    if (op.op == 'F') {
      ++pos;
      if (steps != 1) throw InvariantViolation(at + "forward step used " + std::to_string(steps) + " list-steps (bound 1)");
    } else if (op.op == 'B') {
      --pos;
    }
    if (t->position() != pos || pv.payload(t->current()) != data[pos - 1])
      throw InvariantViolation(at + "traverser left the expected node");
    if (cap && pv.counters().pebbles_now > *cap)
      throw InvariantViolation(at + "pebbles " + std::to_string(pv.counters().pebbles_now) + " exceed the cap " +
                               std::to_string(*cap));
  };
  TraceResult r = run_trace(*t, s.ops, hooks);

  json j;
  j["variant"] = variant_name(v);
  j["n"] = len;
  j["k"] = k;
  j["final_position"] = r.final_position;
  j["total_list_steps"] = r.total_list_steps;
  j["pebbles_max"] = r.pebbles_max;
  j["per_back_step_max"] = r.per_back_step_max;
  j["back_steps"] = r.back_steps;
  if (flags.log_ops) {
    json log = json::array();
    for (const auto& e : r.log)
      log.push_back({{"op", std::string(1, e.op)},
                     {"position", e.position},
                     {"list_steps_delta", e.list_steps_delta},
                     {"pebbles_now", e.pebbles_now}});
    j["per_op_log"] = std::move(log);
  }
  Sink sink(flags.out);
  sink.out() << j.dump(2) << '\n';
  return 0;
}

int cmd_bench(const std::vector<std::string>& variants, const std::vector<std::uint64_t>& ns,
              const std::vector<std::uint32_t>& ks, const Common& flags, bool wall) {
  Sink sink(flags.out);
  auto& out = sink.out();
  out << "variant,n,k,total_back_list_steps,pebbles_max,worst_back_step,wall_ns\n";
  for (const auto& name : variants) {
    Variant v = parse_variant(name);
    bool uses_k = v == Variant::Sparse || v == Variant::Dense || v == Variant::Uniform;
    for (std::uint64_t n : ns) {
      if (n == 0) throw BadRequest("n must be positive");
      for (std::uint32_t k : uses_k ? ks : std::vector<std::uint32_t>{0}) {
        VectorProvider<std::uint64_t> pv(payloads(n, flags.seed));
        auto start = std::chrono::steady_clock::now();
        auto t = make_traverser(v, pv, {n, k == 0 ? 2 : k, flags.epsilon});
        while (t->position() < n) t->forward();
        auto before = pv.counters().list_steps;
        std::uint64_t worst = 0;
        while (t->position() > 1) {
          auto b = pv.counters().list_steps;
          t->back();
          worst = std::max(worst, pv.counters().list_steps - b);
        }
        auto ns_used = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
        auto cap = pebble_cap(v, n, k == 0 ? 2 : k);
        if (cap && pv.counters().pebbles_max > *cap)
          throw InvariantViolation(name + " n=" + std::to_string(n) + " k=" + std::to_string(k) + ": pebbles_max " +
                                   std::to_string(pv.counters().pebbles_max) + " exceeds the cap " +
                                   std::to_string(*cap));
        out << name << ',' << n << ',' << k << ',' << pv.counters().list_steps - before << ','
            << pv.counters().pebbles_max << ',' << worst << ',' << (wall ? ns_used.count() : 0) << '\n';
      }
    }
  }
  return 0;
}

int cmd_hashchain(std::uint64_t n, std::uint32_t k, const std::string& hash, const std::string& mode_name,
                  std::string seed_hex, const Common& flags) {
  if (n == 0) throw BadRequest("n must be positive");
  HashFn h = hash_by_name(hash);
  ChainMode mode;
  if (mode_name == "sparse")
    mode = ChainMode::Sparse;
  else if (mode_name == "dense")
    mode = ChainMode::Dense;
  else if (mode_name == "worstcase")
    mode = ChainMode::WorstCase;
  else
    throw BadRequest("unknown chain mode '" + mode_name + "'");
  Bytes seed;
  if (seed_hex.empty()) {
    for (int i = 7; i >= 0; --i) seed.push_back(static_cast<char>((flags.seed >> (8 * i)) & 0xff));
  } else {
    seed = from_hex(seed_hex);
  }
  // last value recomputed directly, to check the first line against
  Bytes last = seed;
  for (std::uint64_t i = 1; i < n; ++i) last = h(last);

  Backstepper bs(seed, n, h, k, mode);
  Sink sink(flags.out);
  auto& out = sink.out();
  std::optional<Bytes> later;
  std::uint64_t ok = 0;
  while (auto item = bs.next()) {
    bool good = later ? verify(item->value, *later, h) : item->value == last;
    ok += good;
    out << item->index << ' ' << to_hex(item->value) << " verify=" << (good ? "true" : "false") << '\n';
    later = std::move(item->value);
  }
  std::cerr << "verified " << ok << "/" << n << ", hash evaluations " << bs.hash_evaluations() << ", stored at most "
            << bs.stored_max() << '\n';
  if (ok != n) throw InvariantViolation("hash chain values failed verification");
  return 0;
}

int cmd_vm(const std::string& program, const std::string& script, const std::string& mode_name, std::uint64_t block,
           const std::string& dump, const Common& flags) {
  Program p = assemble(slurp(program));
  auto steps = parse_vm_script(slurp(script));
  RollbackMode mode;
  if (mode_name == "synopsis")
    mode = RollbackMode::Synopsis;
  else if (mode_name == "delta")
    mode = RollbackMode::Delta;
  else
    throw BadRequest("unknown rollback mode '" + mode_name + "'");
  ReversibleVM vm(p, {}, mode, block);
  Sink sink(flags.out);
  auto& out = sink.out();
  std::size_t line = 0;
  for (const auto& s : steps) {
    ++line;
    std::uint64_t resteps = 0;
    for (std::uint64_t i = 0; i < s.count; ++i) {
      if (s.rollback) {
        if (vm.index() == 0) throw InvariantViolation("script step " + std::to_string(line) + ": rollback at s_0");
        vm.rollback();
        resteps = std::max(resteps, vm.last_rollback_resteps());
      } else {
        vm.step();
      }
    }
    std::ostringstream hash;
    hash << std::hex << state_hash(vm.state());
    out << line << ' ' << vm.index() << ' ' << hash.str();
    if (s.rollback) out << " worst_resteps=" << resteps;
    out << '\n';
  }
  out << "snapshots " << vm.snapshots_stored() << " deltas " << vm.deltas_stored() << " vm_steps " << vm.vm_steps()
      << '\n';
  if (!dump.empty()) {
    std::ofstream d(dump, std::ios::binary);
    if (!d) throw BadRequest("cannot write " + dump);
    d << vm.state().serialize();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List traversal synopses: traces, benchmarks and demos"};
  app.require_subcommand(1);
  Common flags;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", flags.seed, "seed for payloads and generated inputs");
    sub->add_option("--out", flags.out, "write output here instead of stdout");
  };

  std::string trace_path;
  auto* trace = app.add_subcommand("trace", "run an F/B/Q script, print metrics as JSON");
  trace->add_option("script", trace_path, "trace script")->required();
  trace->add_option("--variant", flags.variant, "basic, refined, worstcase, sparse, dense, supernode, restart, trailing, uniform");
  trace->add_option("--n", flags.n, "list length (default: farthest position the script reaches)");
  trace->add_option("--k", flags.k, "levels for sparse, dense and uniform");
  trace->add_option("--epsilon", flags.epsilon, "forward overhead for supernode");
  trace->add_flag("--log-ops", flags.log_ops, "include one record per op");
  common(trace);

  std::vector<std::string> bench_variants{"basic", "refined", "worstcase", "sparse", "dense"};
  std::vector<std::uint64_t> bench_n{1024, 2048, 4096, 8192, 16384};
  std::vector<std::uint32_t> bench_k{2};
  bool bench_wall = false;
  auto* bench = app.add_subcommand("bench", "full forward then back traversal per row, CSV out");
  bench->add_option("--variant", bench_variants, "variants to run")->delimiter(',');
  bench->add_option("--n", bench_n, "list lengths")->delimiter(',');
  bench->add_option("--k", bench_k, "k values for sparse, dense and uniform")->delimiter(',');
  bench->add_option("--epsilon", flags.epsilon, "forward overhead for supernode");
  bench->add_flag("--wall", bench_wall, "fill wall_ns (output is then no longer reproducible)");
  common(bench);

  std::uint64_t chain_n = 8;
  std::uint32_t chain_k = 2;
  std::string chain_hash = "toy", chain_mode = "sparse", chain_seed;
  auto* chain = app.add_subcommand("hashchain", "print a hash chain backwards with verification");
  chain->add_option("--n", chain_n, "chain length");
  chain->add_option("--k", chain_k, "levels for sparse and dense");
  chain->add_option("--hash", chain_hash, "toy or sha256");
  chain->add_option("--mode", chain_mode, "sparse, dense or worstcase");
  chain->add_option("--seed-hex", chain_seed, "seed value as hex (default: --seed as 8 bytes)");
  common(chain);

  std::string vm_program, vm_script, vm_mode = "synopsis", vm_dump;
  std::uint64_t vm_block = 16;
  auto* vm = app.add_subcommand("vm", "run a program under a run/rollback script, print state hashes");
  vm->add_option("program", vm_program, "assembly source")->required();
  vm->add_option("--script", vm_script, "run/rollback script")->required();
  vm->add_option("--mode", vm_mode, "synopsis or delta");
  vm->add_option("--block", vm_block, "delta window and block length");
  vm->add_option("--dump", vm_dump, "write the final state's canonical bytes here");
  common(vm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*trace) return cmd_trace(trace_path, flags, *trace);
    if (*bench) return cmd_bench(bench_variants, bench_n, bench_k, flags, bench_wall);
    if (*chain) return cmd_hashchain(chain_n, chain_k, chain_hash, chain_mode, chain_seed, flags);
    if (*vm) return cmd_vm(vm_program, vm_script, vm_mode, vm_block, vm_dump, flags);
  } catch (const BadRequest& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvariantViolation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
