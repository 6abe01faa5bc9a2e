#include "lts/trace_script.hpp"

#include <sstream>

namespace lts {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw BadRequest("line " + std::to_string(line) + ": " + msg);
}

template <class T>
T number(const std::string& tok, std::size_t line) {
  std::istringstream in(tok);
  T v{};
  char extra;
  if (!(in >> v) || (in >> extra) || (!tok.empty() && tok[0] == '-')) fail(line, "bad number '" + tok + "'");
  return v;
}

}  // namespace

TraceScript parse_trace_script(const std::string& text) {
  TraceScript s;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& w = tok[0];
    if (w == "F" || w == "B") {
      if (tok.size() != 1) fail(line, "'" + w + "' takes no argument");
      s.ops.push_back({w[0], 0});
      continue;
    }
    if (w == "Q") {
      if (tok.size() != 2) fail(line, "'Q' takes one distance");
      auto j = number<std::uint64_t>(tok[1], line);
      if (j == 0) fail(line, "query distance must be positive");
      s.ops.push_back({'Q', j});
      continue;
    }
    if (w != "n" && w != "variant" && w != "k" && w != "epsilon" && w != "seed")
      fail(line, "unknown op or header '" + w + "'");
    if (!s.ops.empty()) fail(line, "header line '" + w + "' after the first op");
    if (tok.size() != 2) fail(line, "header '" + w + "' takes one value");
    if (w == "n") {
      s.n = number<std::uint64_t>(tok[1], line);
      if (*s.n == 0) fail(line, "n must be positive");
    } else if (w == "variant") {
      s.variant = tok[1];
    } else if (w == "k") {
      s.k = number<std::uint32_t>(tok[1], line);
    } else if (w == "epsilon") {
      s.epsilon = number<double>(tok[1], line);
    } else {
      s.seed = number<std::uint64_t>(tok[1], line);
    }
  }
  return s;
}

std::string format_trace_script(const TraceScript& s) {
  std::ostringstream out;
  if (s.n) out << "n " << *s.n << '\n';
  if (s.variant) out << "variant " << *s.variant << '\n';
  if (s.k) out << "k " << *s.k << '\n';
  if (s.epsilon) out << "epsilon " << *s.epsilon << '\n';
  if (s.seed) out << "seed " << *s.seed << '\n';
  for (const auto& op : s.ops) {
    out << op.op;
    if (op.op == 'Q') out << ' ' << op.arg;
    out << '\n';
  }
  return out.str();
}

TraceExtent trace_extent(const std::vector<TraceOp>& ops, std::optional<std::uint64_t> n) {
  TraceExtent e;
  Position pos = 1;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& op = ops[i];
    if (op.op == 'F') {
      if (n && pos == *n) {
        e.bad_op = i + 1;
        e.reason = "forward step past the last node (position <= n)";
        return e;
      }
      ++pos;
      if (pos > e.farthest) e.farthest = pos;
    } else if (op.op == 'B') {
      if (pos == 1) {
        e.bad_op = i + 1;
        e.reason = "back step at position 1 (position >= 1)";
        return e;
      }
      --pos;
    } else if (op.arg >= pos) {
      e.bad_op = i + 1;
      e.reason = "query reaches before the head (j < position)";
      return e;
    }
  }
  return e;
}

}  // namespace lts
