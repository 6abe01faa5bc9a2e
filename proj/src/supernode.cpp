#include "lts/supernode.hpp"

#include <cmath>

namespace lts {

SuperNodeProvider::SuperNodeProvider(Provider& base, std::uint64_t block) : base_pv_(base), block_(block) {
  if (block_ == 0) throw BadRequest("super-node block must be at least 1");
}

std::optional<Position> SuperNodeProvider::length() const {
  auto len = base_pv_.length();
  if (!len) return std::nullopt;
  return (*len + block_ - 1) / block_;
}

void SuperNodeProvider::on_head(Pebble p) { slot(p) = base_pv_.head(); }

void SuperNodeProvider::on_advance(Pebble p, Position from) {
  if (offer_at_ == from + 1) {
    LTS_CHECK(base_pv_.position(offer_src_) == from * block_ + 1, "offered pebble not on the super-node start");
    base_pv_.assign(base_[p], offer_src_);
    offer_at_ = 0;
    return;
  }
  auto len = base_pv_.length();
  if (len && from * block_ + 1 > *len) throw EndOfList(from);
  for (std::uint64_t i = 0; i < block_; ++i) base_pv_.advance(base_[p]);
}

void SuperNodeProvider::on_copy(Pebble dst, Pebble src) {
  Pebble& d = slot(dst);
  if (d == kNoPebble)
    d = base_pv_.duplicate(base_[src]);
  else
    base_pv_.assign(d, base_[src]);
}

void SuperNodeProvider::on_release(Pebble p) {
  base_pv_.release(base_[p]);
  base_[p] = kNoPebble;
}

namespace {

class NullProvider final : public Provider {
 public:
  std::optional<Position> length() const override { return std::nullopt; }

 protected:
  void on_head(Pebble) override {}
  void on_advance(Pebble, Position) override {}
  void on_copy(Pebble, Pebble) override {}
};

}  // namespace

std::uint32_t calibrate_forward_mutations(std::uint64_t steps) {
  NullProvider pv;
  WorstCasePebbler w(pv, 0);
  for (std::uint64_t i = 0; i < steps; ++i) w.forward();
  return std::max<std::uint32_t>(1, w.stats().mutations_max);
}

SuperNodeTraverser::SuperNodeTraverser(Provider& base, std::uint64_t n, double epsilon, std::uint64_t block)
    : base_(base) {
  if (!(epsilon > 0)) throw BadRequest("epsilon must be positive");
  c_ = calibrate_forward_mutations();
  if (block == 0) {
    // half of epsilon for record-tree changes, half for the shortcut copy
    block = static_cast<std::uint64_t>(std::ceil(static_cast<double>(c_) / (epsilon / 2)));
    if (block == 0) block = 1;
  }
  sp_ = std::make_unique<SuperNodeProvider>(base, block);
  inner_ = std::make_unique<WorstCasePebbler>(*sp_, n == 0 ? 0 : (n + block - 1) / block);
  cur_ = base_.duplicate(sp_->base_of(inner_->current()));
}

SuperNodeTraverser::~SuperNodeTraverser() = default;

void SuperNodeTraverser::forward() {
  base_.advance(cur_);
  ++forward_steps_;
  const Position c = position();
  const std::uint64_t B = sp_->block();
  if ((c - 1) % B == 0) {
    sp_->offer((c - 1) / B + 1, cur_);
    inner_->forward();
    work_ += inner_->stats().mutations_last + 1;
  }
}

void SuperNodeTraverser::back() {
  const Position c = position();
  if (c <= 1) throw BadRequest("back step at position 1");
  if ((c - 1) % sp_->block() == 0) {
    inner_->back();
    ++inner_backs_;
  }
  Pebble w = base_.duplicate(sp_->base_of(inner_->current()));
  while (base_.position(w) < c - 1) base_.advance(w);
  base_.release(cur_);
  cur_ = w;
}

void SuperNodeTraverser::pebbled(std::vector<Pebble>& out) const {
  std::vector<Pebble> in;
  inner_->pebbled(in);
  out.clear();
  for (Pebble p : in) out.push_back(sp_->base_of(p));
  out.push_back(cur_);
}

}  // namespace lts
