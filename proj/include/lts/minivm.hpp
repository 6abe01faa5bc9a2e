#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lts/psp.hpp"

namespace lts {

enum class OpCode : std::uint8_t { Add, Sub, Li, Load, Store, Jnz, Halt };

struct Instr {
  OpCode op = OpCode::Halt;
  std::uint8_t a = 0, b = 0, c = 0;
  std::uint64_t imm = 0;  // li value or jnz target
};

using Program = std::vector<Instr>;

// Assembles one instruction per line:
//   add rD rA rB | sub rD rA rB | li rD imm | load rD rA | store rA rB
//   jnz rA target | halt
// '#' starts a comment. Jump targets are instruction indices. Errors name
// the line and throw BadRequest.
Program assemble(const std::string& text);
std::string disassemble(const Program& p);

// Random program over the full ISA; jumps stay in range.
Program random_program(std::uint64_t seed, std::size_t length);

struct VMState {
  static constexpr std::size_t kRegs = 8;
  static constexpr std::size_t kTape = 256;
  std::array<std::uint64_t, kRegs> reg{};
  std::uint64_t pc = 0;
  std::array<std::uint64_t, kTape> tape{};
  bool operator==(const VMState&) const = default;

  // registers, pc, tape; 8-byte big-endian each
  std::string serialize() const;
  static VMState deserialize(const std::string& bytes);
  static constexpr std::size_t kBytes = 8 * (kRegs + 1 + kTape);
};

// One instruction. A pc past the end or on halt leaves the state unchanged.
VMState vm_step(const Program& p, const VMState& s);

// Reverse difference from a successor state back to its predecessor.
struct Delta {
  struct Cell {
    std::uint16_t field;  // 0..7 registers, 8 pc, 9.. tape
    std::uint64_t value;
  };
  std::vector<Cell> cells;
  std::size_t bytes() const { return cells.size() * (sizeof(std::uint16_t) + sizeof(std::uint64_t)); }
};
// Delta that turns `to` back into `from`.
Delta reverse_delta(const VMState& from, const VMState& to);
void apply_delta(VMState& s, const Delta& d);

std::uint64_t state_hash(const VMState& s);

// Driver script: one `run N` or `rollback N` per line, '#' comments.
struct ScriptStep {
  bool rollback = false;
  std::uint64_t count = 0;
};
std::vector<ScriptStep> parse_vm_script(const std::string& text);

}  // namespace lts
