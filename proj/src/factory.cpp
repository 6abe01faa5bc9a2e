#include "lts/factory.hpp"

#include <algorithm>

#include "lts/amortized.hpp"
#include "lts/baselines.hpp"
#include "lts/kary.hpp"
#include "lts/supernode.hpp"
#include "lts/worstcase.hpp"

namespace lts {

namespace {

const std::pair<Variant, const char*> kNames[] = {
    {Variant::Basic, "basic"},         {Variant::Refined, "refined"},     {Variant::WorstCase, "worstcase"},
    {Variant::Sparse, "sparse"},       {Variant::Dense, "dense"},         {Variant::SuperNode, "supernode"},
    {Variant::Restart, "restart"},     {Variant::Trailing, "trailing"},   {Variant::Uniform, "uniform"},
};

}  // namespace

Variant parse_variant(const std::string& name) {
  for (auto [v, s] : kNames)
    if (name == s) return v;
  throw BadRequest("unknown variant '" + name + "'");
}

std::string variant_name(Variant v) {
  for (auto [w, s] : kNames)
    if (v == w) return s;
  return "?";
}

std::uint64_t lg_ceil(std::uint64_t n) {
  std::uint64_t k = 0;
  while (k < 64 && (std::uint64_t{1} << k) < n) ++k;
  return k;
}

std::unique_ptr<Traverser> make_traverser(Variant v, Provider& pv, const TraverserOptions& opt) {
  if (opt.n == 0 && v != Variant::WorstCase && v != Variant::Restart && v != Variant::Trailing)
    throw BadRequest(variant_name(v) + " needs a list length");
  switch (v) {
    case Variant::Basic: return std::make_unique<AmortizedPebbler>(pv, opt.n, AmortizedVariant::Basic);
    case Variant::Refined: return std::make_unique<AmortizedPebbler>(pv, opt.n, AmortizedVariant::Refined);
    case Variant::WorstCase: return std::make_unique<WorstCasePebbler>(pv, opt.n);
    case Variant::Sparse: return std::make_unique<KaryPebbler>(pv, opt.n, opt.k, KaryMode::Sparse);
    case Variant::Dense: return std::make_unique<KaryPebbler>(pv, opt.n, opt.k, KaryMode::Dense);
    case Variant::SuperNode: return std::make_unique<SuperNodeTraverser>(pv, opt.n, opt.epsilon);
    case Variant::Restart: return std::make_unique<RestartFromHead>(pv);
    case Variant::Trailing: return std::make_unique<TrailingAll>(pv);
    case Variant::Uniform: return std::make_unique<UniformK>(pv, opt.n, opt.k);
  }
  throw BadRequest("unknown variant");
}

std::optional<std::uint64_t> pebble_cap(Variant v, std::uint64_t n, std::uint32_t k) {
  const std::uint64_t L = lg_ceil(n);
  switch (v) {
    // blue path plus every green path below it
    case Variant::Basic: return (L + 1) * (L + 2) / 2;
    case Variant::Refined: return std::max<std::uint64_t>(2, 2 * L);
    case Variant::WorstCase: return L + 3;
    case Variant::Sparse: return 3 * std::uint64_t{k};
    case Variant::Dense: return 2 * std::uint64_t{k} * int_root_ceil(n, k);
    case Variant::Restart: return 2;
    default: return std::nullopt;
  }
}

}  // namespace lts
