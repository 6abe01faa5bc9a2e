#include "lts/amortized.hpp"

#include <algorithm>

namespace lts {

namespace {

std::uint32_t ceil_lg(std::uint64_t n) {
  std::uint32_t k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

AmortizedPebbler::AmortizedPebbler(Provider& pv, std::uint64_t n, AmortizedVariant variant)
    : pv_(pv), variant_(variant), shape_(binary_shape_for(n)), H_(shape_.depth + 1) {
  Pebble head = pv_.head();
  path_.push_back({1, H_, false, true});
  blue_.push_back(head);
  if (variant_ == AmortizedVariant::Refined) {
    pool_ = std::max<std::size_t>(2, 2 * static_cast<std::size_t>(ceil_lg(n)));
    rb_ = std::make_unique<RecyclingBin>(pool_);
    for (std::size_t i = 1; i < pool_; ++i) rb_->put_pebble(pv_.duplicate(head));
  }
  note_in_use();
}

AmortizedPebbler::~AmortizedPebbler() = default;

Pebble AmortizedPebbler::alloc_at(Pebble from) {
  if (!rb_) return pv_.duplicate(from);
  Pebble p = rb_->get_pebble();
  // a stolen pebble may be `from` itself, when it sat at the bottom of a list
  if (p != from) pv_.assign(p, from);
  return p;
}

void AmortizedPebbler::free_pebble(Pebble p) {
  if (rb_)
    rb_->put_pebble(p);
  else
    pv_.release(p);
}

void AmortizedPebbler::pop_newest_list(Position& key, std::vector<Pebble>& pebbles, std::uint32_t& removed) {
  if (rb_) {
    ListRecord r = rb_->get_list();
    key = r.key;
    pebbles = std::move(r.pebbles);
    removed = r.removed;
    return;
  }
  LTS_CHECK(!greens_.empty(), "no green path left");
  key = greens_.back().key;
  pebbles = std::move(greens_.back().pebbles);
  removed = 0;
  greens_.pop_back();
}

void AmortizedPebbler::push_list(Position key, std::vector<Pebble> pebbles) {
  if (rb_)
    rb_->put_list(key, std::move(pebbles));
  else
    greens_.push_back({key, std::move(pebbles)});
}

std::size_t AmortizedPebbler::in_use() const {
  if (rb_) return pool_ - rb_->bag_size();
  return blue_.size() + green_count();
}

std::size_t AmortizedPebbler::green_count() const {
  std::size_t g = 0;
  if (rb_) {
    for (const auto& r : rb_->records()) g += r.pebbles.size();
  } else {
    for (const auto& e : greens_) g += e.pebbles.size();
  }
  return g;
}

void AmortizedPebbler::note_in_use() { in_use_max_ = std::max(in_use_max_, in_use()); }

// The last green path stops being last once the blue path leaves its run;
// its budget drops to the run length, counted from its right sibling down to
// the node at a_idx.
void AmortizedPebbler::trim_last_green(std::size_t a_idx) {
  std::size_t i = a_idx + 1;
  while (i-- > 1)
    if (!path_[i].left) break;
  if (i == 0) return;  // no right child above
  const auto* r = rb_->newest();
  LTS_CHECK(r && r->key == path_[i - 1].pos + 1, "last green path is not the newest list");
  rb_->trim(r->rank, a_idx - i + 1);
}

void AmortizedPebbler::forward() {
  const bin::Step c = path_.back();
  if (c.h >= 2) {
    Pebble p = alloc_at(blue_.back());
    pv_.advance(p);
    path_.push_back({c.pos + 1, c.h - 1, true, false});
    blue_.push_back(p);
    note_in_use();
    return;
  }
  // leaf: the successor is the right sibling of the deepest left child v
  std::size_t vi = path_.size();
  while (vi-- > 0)
    if (path_[vi].left) break;
  if (vi == static_cast<std::size_t>(-1)) throw EndOfList(c.pos);
  const bin::Step a = path_[vi - 1];
  const Position v = a.pos + 1;

  // green paths hanging off v's spine are not needed any more
  while (true) {
    Position key = 0;
    if (rb_) {
      const auto* r = rb_->newest();
      if (!r || r->key <= v) break;
    } else if (greens_.empty() || greens_.back().key <= v) {
      break;
    }
    std::vector<Pebble> ps;
    std::uint32_t removed;
    pop_newest_list(key, ps, removed);
    for (Pebble p : ps) free_pebble(p);
  }
  if (rb_) trim_last_green(vi - 1);

  std::vector<Pebble> spine(blue_.begin() + static_cast<std::ptrdiff_t>(vi), blue_.end());
  const Pebble at_c = blue_.back();
  path_.resize(vi);
  blue_.resize(vi);
  push_list(v, std::move(spine));
  Pebble p = alloc_at(at_c);
  pv_.advance(p);
  path_.push_back({a.pos + (std::uint64_t{1} << (a.h - 1)), a.h - 1, false, false});
  blue_.push_back(p);
  note_in_use();
}

void AmortizedPebbler::back() {
  const bin::Step c = path_.back();
  if (c.root) throw BadRequest("back step at position 1");
  if (c.left) {
    free_pebble(blue_.back());
    path_.pop_back();
    blue_.pop_back();
    return;
  }
  free_pebble(blue_.back());
  path_.pop_back();
  blue_.pop_back();
  const bin::Step a = path_.back();
  const Position v = a.pos + 1;
  const std::uint32_t g = c.h;  // height of v

  Position key = 0;
  std::vector<Pebble> ps;
  std::uint32_t removed = 0;
  pop_newest_list(key, ps, removed);
  LTS_CHECK(key == v, "newest green path does not belong to the current node");
  LTS_CHECK(ps.size() <= g, "green path longer than its subpath");

  // spine of v: v, then right children down to the leaf c-1
  std::vector<bin::Step> spine;
  spine.push_back({v, g, true, false});
  for (std::uint32_t m = 1; m < g; ++m) {
    const auto& s = spine.back();
    spine.push_back({s.pos + (std::uint64_t{1} << (s.h - 1)), s.h - 1, false, false});
  }
  if (ps.size() < g) {
    // rebuild the missing bottom part, walking from the deepest pebble left
    Pebble w = alloc_at(ps.empty() ? blue_.back() : ps.back());
    for (std::size_t m = ps.size(); m < g; ++m) {
      while (pv_.position(w) < spine[m].pos) pv_.advance(w);
      if (m + 1 == g) {
        ps.push_back(w);
      } else {
        ps.push_back(alloc_at(w));
      }
    }
  }
  for (std::size_t m = 0; m < g; ++m) {
    LTS_CHECK(pv_.position(ps[m]) == spine[m].pos, "green pebble off its node");
    path_.push_back(spine[m]);
    blue_.push_back(ps[m]);
    // every right child on the spine gets an (empty) green path record
    if (m > 0) push_list(spine[m - 1].pos + 1, {});
  }
  note_in_use();
}

void AmortizedPebbler::pebbled(std::vector<Pebble>& out) const {
  out = blue_;
  if (rb_) {
    for (const auto& r : rb_->records()) out.insert(out.end(), r.pebbles.begin(), r.pebbles.end());
  } else {
    for (const auto& e : greens_) out.insert(out.end(), e.pebbles.begin(), e.pebbles.end());
  }
}

Pebble AmortizedPebbler::take_spare(Pebble like) {
  // an empty bag means stealing a green; it comes back through the bag
  if (rb_ && rb_->total_pebbles() > 0) {
    Pebble p = rb_->get_pebble();
    if (p != like) pv_.assign(p, like);
    spare_from_bag_.push_back(p);
    return p;
  }
  return pv_.duplicate(like);
}

void AmortizedPebbler::return_spare(Pebble p) {
  auto it = std::find(spare_from_bag_.begin(), spare_from_bag_.end(), p);
  if (it != spare_from_bag_.end()) {
    spare_from_bag_.erase(it);
    rb_->put_pebble(p);
    return;
  }
  pv_.release(p);
}

void AmortizedPebbler::check() const {
  for (std::size_t i = 0; i < path_.size(); ++i)
    LTS_CHECK(pv_.position(blue_[i]) == path_[i].pos, "blue pebble off its node");
  // green path records, oldest first, against right children on the path
  std::vector<std::pair<Position, const std::vector<Pebble>*>> lists;
  if (rb_) {
    rb_->check();
    for (const auto& r : rb_->records()) lists.push_back({r.key, &r.pebbles});
  } else {
    for (const auto& e : greens_) lists.push_back({e.key, &e.pebbles});
  }
  std::vector<NodeId> nodes = blue_path(shape_, node_at(shape_, position()));
  auto mi = mirror_info(shape_, nodes);
  LTS_CHECK(mi.size() == lists.size(), "green path count differs from right children on the path");
  for (std::size_t k = 0; k < mi.size(); ++k) {
    LTS_CHECK(lists[k].first == mi[k].left_child, "green path keyed to the wrong node");
    const auto& ps = *lists[k].second;
    LTS_CHECK(ps.size() <= mi[k].subpath_len, "green path too long");
    if (rb_) LTS_CHECK(ps.size() <= mi[k].budget || mi[k].last, "green path over its mirror budget");
    Position s = mi[k].left_child;
    std::uint32_t h = bin::height_of(H_, s);
    for (Pebble p : ps) {
      LTS_CHECK(pv_.position(p) == s, "green pebble off its subpath");
      s += std::uint64_t{1} << (h - 1);
      --h;
    }
  }
}

}  // namespace lts
