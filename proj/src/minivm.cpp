#include "lts/minivm.hpp"

#include <random>
#include <sstream>

namespace lts {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw BadRequest("line " + std::to_string(line) + ": " + msg);
}

std::uint8_t reg_of(const std::string& tok, std::size_t line) {
  if (tok.size() != 2 || (tok[0] != 'r' && tok[0] != 'R') || tok[1] < '0' || tok[1] > '7')
    fail(line, "expected a register r0..r7, got '" + tok + "'");
  return static_cast<std::uint8_t>(tok[1] - '0');
}

std::uint64_t num_of(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(tok, &used, 0);
    if (used != tok.size()) fail(line, "bad number '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "bad number '" + tok + "'");
  }
}

const char* name_of(OpCode op) {
  switch (op) {
    case OpCode::Add: return "add";
    case OpCode::Sub: return "sub";
    case OpCode::Li: return "li";
    case OpCode::Load: return "load";
    case OpCode::Store: return "store";
    case OpCode::Jnz: return "jnz";
    case OpCode::Halt: return "halt";
  }
  return "?";
}

void put_be(std::string& out, std::uint64_t v) {
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_be(const std::string& in, std::size_t at) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < 8; ++i) v = (v << 8) | static_cast<unsigned char>(in[at + i]);
  return v;
}

}  // namespace

Program assemble(const std::string& text) {
  Program prog;
  std::vector<std::pair<std::size_t, std::size_t>> jumps;  // instruction, line
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
    Instr ins;
    auto want = [&](std::size_t k) {
      if (tok.size() != k + 1) fail(line, "'" + tok[0] + "' takes " + std::to_string(k) + " operands");
    };
    const std::string& m = tok[0];
    if (m == "add" || m == "sub") {
      want(3);
      ins.op = m == "add" ? OpCode::Add : OpCode::Sub;
      ins.a = reg_of(tok[1], line);
      ins.b = reg_of(tok[2], line);
      ins.c = reg_of(tok[3], line);
    } else if (m == "li") {
      want(2);
      ins.op = OpCode::Li;
      ins.a = reg_of(tok[1], line);
      ins.imm = num_of(tok[2], line);
    } else if (m == "load" || m == "store") {
      want(2);
      ins.op = m == "load" ? OpCode::Load : OpCode::Store;
      ins.a = reg_of(tok[1], line);
      ins.b = reg_of(tok[2], line);
    } else if (m == "jnz") {
      want(2);
      ins.op = OpCode::Jnz;
      ins.a = reg_of(tok[1], line);
      ins.imm = num_of(tok[2], line);
      jumps.push_back({prog.size(), line});
    } else if (m == "halt") {
      want(0);
      ins.op = OpCode::Halt;
    } else {
      fail(line, "unknown instruction '" + m + "'");
    }
    prog.push_back(ins);
  }
  for (auto [i, l] : jumps)
    if (prog[i].imm >= prog.size()) fail(l, "jump target out of range");
  if (prog.empty()) throw BadRequest("empty program");
  return prog;
}

std::string disassemble(const Program& p) {
  std::ostringstream out;
  for (const auto& i : p) {
    out << name_of(i.op);
    switch (i.op) {
      case OpCode::Add:
      case OpCode::Sub: out << " r" << int(i.a) << " r" << int(i.b) << " r" << int(i.c); break;
      case OpCode::Li:
      case OpCode::Jnz: out << " r" << int(i.a) << ' ' << i.imm; break;
      case OpCode::Load:
      case OpCode::Store: out << " r" << int(i.a) << " r" << int(i.b); break;
      case OpCode::Halt: break;
    }
    out << '\n';
  }
  return out.str();
}

Program random_program(std::uint64_t seed, std::size_t length) {
  std::mt19937_64 rng(seed);
  Program p(length);
  for (std::size_t k = 0; k < length; ++k) {
    Instr& i = p[k];
    auto r = [&] { return static_cast<std::uint8_t>(rng() % VMState::kRegs); };
    switch (rng() % 12) {
      case 0: case 1: case 2: i = {OpCode::Add, r(), r(), r(), 0}; break;
      case 3: case 4: i = {OpCode::Sub, r(), r(), r(), 0}; break;
      case 5: case 6: i = {OpCode::Li, r(), 0, 0, rng() % 1000}; break;
      case 7: i = {OpCode::Load, r(), r(), 0, 0}; break;
      case 8: case 9: i = {OpCode::Store, r(), r(), 0, 0}; break;
      default: i = {OpCode::Jnz, r(), 0, 0, rng() % length}; break;
    }
  }
  return p;
}

std::string VMState::serialize() const {
  std::string out;
  out.reserve(kBytes);
  for (auto v : reg) put_be(out, v);
  put_be(out, pc);
  for (auto v : tape) put_be(out, v);
  return out;
}

VMState VMState::deserialize(const std::string& bytes) {
  if (bytes.size() != kBytes) throw BadRequest("snapshot has the wrong size");
  VMState s;
  std::size_t at = 0;
  for (auto& v : s.reg) v = get_be(bytes, (at++) * 8);
  s.pc = get_be(bytes, (at++) * 8);
  for (auto& v : s.tape) v = get_be(bytes, (at++) * 8);
  return s;
}

VMState vm_step(const Program& p, const VMState& s) {
  VMState t = s;
  if (s.pc >= p.size()) return t;
  const Instr& i = p[s.pc];
  t.pc = s.pc + 1;
  switch (i.op) {
    case OpCode::Add: t.reg[i.a] = s.reg[i.b] + s.reg[i.c]; break;
    case OpCode::Sub: t.reg[i.a] = s.reg[i.b] - s.reg[i.c]; break;
    case OpCode::Li: t.reg[i.a] = i.imm; break;
    case OpCode::Load: t.reg[i.a] = s.tape[s.reg[i.b] % VMState::kTape]; break;
    case OpCode::Store: t.tape[s.reg[i.a] % VMState::kTape] = s.reg[i.b]; break;
    case OpCode::Jnz:
      if (s.reg[i.a] != 0) t.pc = i.imm;
      break;
    case OpCode::Halt: t.pc = s.pc; break;
  }
  return t;
}

Delta reverse_delta(const VMState& from, const VMState& to) {
  Delta d;
  for (std::uint16_t k = 0; k < VMState::kRegs; ++k)
    if (from.reg[k] != to.reg[k]) d.cells.push_back({k, from.reg[k]});
  if (from.pc != to.pc) d.cells.push_back({VMState::kRegs, from.pc});
  for (std::uint16_t k = 0; k < VMState::kTape; ++k)
    if (from.tape[k] != to.tape[k]) d.cells.push_back({static_cast<std::uint16_t>(VMState::kRegs + 1 + k), from.tape[k]});
  return d;
}

void apply_delta(VMState& s, const Delta& d) {
  for (const auto& c : d.cells) {
    if (c.field < VMState::kRegs)
      s.reg[c.field] = c.value;
    else if (c.field == VMState::kRegs)
      s.pc = c.value;
    else
      s.tape[c.field - VMState::kRegs - 1] = c.value;
  }
}

std::uint64_t state_hash(const VMState& s) {
  // FNV-1a over the canonical bytes
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s.serialize()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<ScriptStep> parse_vm_script(const std::string& text) {
  std::vector<ScriptStep> out;
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
    if (tok.size() != 2 || (tok[0] != "run" && tok[0] != "rollback")) fail(line, "expected 'run N' or 'rollback N'");
    out.push_back({tok[0] == "rollback", num_of(tok[1], line)});
  }
  return out;
}

}  // namespace lts
