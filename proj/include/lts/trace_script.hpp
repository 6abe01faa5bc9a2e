#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lts/traverser.hpp"

namespace lts {

// Text form of a trace:
//   n 4096            header lines, any subset, before the first op
//   variant refined
//   k 3
//   epsilon 0.1
//   seed 7
//   F                 one op per line
//   B
//   Q 5
// '#' starts a comment. Errors throw BadRequest naming the line.
struct TraceScript {
  std::optional<std::uint64_t> n;
  std::optional<std::string> variant;
  std::optional<std::uint32_t> k;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::vector<TraceOp> ops;
};

TraceScript parse_trace_script(const std::string& text);
std::string format_trace_script(const TraceScript& s);

// Farthest position the ops reach from position 1, or the first op that
// would leave [1, n] (1-based op index) when n is given.
struct TraceExtent {
  Position farthest = 1;
  std::size_t bad_op = 0;  // 0 = none
  std::string reason;
};
TraceExtent trace_extent(const std::vector<TraceOp>& ops, std::optional<std::uint64_t> n);

}  // namespace lts
