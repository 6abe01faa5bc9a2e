#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "lts/psp.hpp"
#include "lts/traverser.hpp"

namespace lts {

using Bytes = std::string;
using HashFn = std::function<Bytes(const Bytes&)>;

// 64-bit mixing function; 8-byte output. For tests and demos only.
Bytes toy_hash(const Bytes& in);
Bytes sha256(const Bytes& in);
// "toy" or "sha256"; throws BadRequest otherwise.
HashFn hash_by_name(const std::string& name);

bool verify(const Bytes& prev, const Bytes& v, const HashFn& h);

std::string to_hex(const Bytes& b);
// Throws BadRequest on odd length or non-hex characters.
Bytes from_hex(const std::string& s);

enum class ChainMode { Sparse, Dense, WorstCase };

// Yields v_{n-1}, ..., v_0 of the chain v_0 = seed, v_i = h(v_{i-1}), keeping
// only the pebbles of the chosen synopsis.
class Backstepper {
 public:
  Backstepper(Bytes seed, std::uint64_t n, HashFn h, std::uint32_t k, ChainMode mode);
  ~Backstepper();
  Backstepper(const Backstepper&) = delete;
  Backstepper& operator=(const Backstepper&) = delete;

  struct Item {
    std::uint64_t index;
    Bytes value;
  };
  std::optional<Item> next();

  std::uint64_t hash_evaluations() const;
  // hash values held at once, at most
  std::uint64_t stored_max() const;
  std::uint64_t worst_step_evaluations() const { return worst_step_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::uint64_t n_;
  std::uint64_t yielded_ = 0;
  std::uint64_t worst_step_ = 0;
};

}  // namespace lts
