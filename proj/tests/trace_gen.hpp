#pragma once

#include <random>
#include <vector>

#include "lts/traverser.hpp"

namespace testgen {

// Random F/B/Q trace that stays inside [1, n]. Runs of one direction have
// geometric lengths so traces both wander and oscillate.
inline std::vector<lts::TraceOp> random_trace(std::uint64_t seed, std::uint64_t n, std::size_t ops,
                                             double q_rate = 0.05) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<lts::TraceOp> out;
  out.reserve(ops);
  std::uint64_t pos = 1;
  bool fwd = true;
  double p_flip = 0.02 + 0.3 * u(rng);
  while (out.size() < ops) {
    if (u(rng) < q_rate && pos > 1) {
      std::uint64_t j = std::uniform_int_distribution<std::uint64_t>(1, pos - 1)(rng);
      out.push_back({'Q', j});
      continue;
    }
    if (u(rng) < p_flip) fwd = !fwd;
    if (fwd && pos == n) fwd = false;
    if (!fwd && pos == 1) fwd = true;
    if (fwd) {
      out.push_back({'F', 0});
      ++pos;
    } else {
      out.push_back({'B', 0});
      --pos;
    }
  }
  return out;
}

// Forward to n, then all the way back.
inline std::vector<lts::TraceOp> full_back_trace(std::uint64_t n) {
  std::vector<lts::TraceOp> out;
  for (std::uint64_t i = 1; i < n; ++i) out.push_back({'F', 0});
  for (std::uint64_t i = 1; i < n; ++i) out.push_back({'B', 0});
  return out;
}

inline std::vector<std::uint64_t> random_payloads(std::uint64_t seed, std::uint64_t n) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = rng();
  return v;
}

}  // namespace testgen
