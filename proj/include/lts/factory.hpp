#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "lts/traverser.hpp"

namespace lts {

enum class Variant { Basic, Refined, WorstCase, Sparse, Dense, SuperNode, Restart, Trailing, Uniform };

// Throws BadRequest on an unknown name.
Variant parse_variant(const std::string& name);
std::string variant_name(Variant v);

struct TraverserOptions {
  std::uint64_t n = 0;      // list length; 0 only for worstcase (unbounded)
  std::uint32_t k = 2;      // sparse, dense, uniform
  double epsilon = 0.1;     // supernode
};

std::unique_ptr<Traverser> make_traverser(Variant v, Provider& pv, const TraverserOptions& opt);

std::uint64_t lg_ceil(std::uint64_t n);

// Pebbles a variant may hold between operations, or nullopt when there is
// no stated cap.
std::optional<std::uint64_t> pebble_cap(Variant v, std::uint64_t n, std::uint32_t k);

}  // namespace lts
