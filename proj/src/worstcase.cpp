#include "lts/worstcase.hpp"

#include <algorithm>

namespace lts {

namespace {

std::uint64_t ceil_lg(std::uint64_t n) {
  std::uint64_t k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

// Per record: position, pointer id and three links into a tree of O(log n)
// records. Reds add a delay field and a slot in the red index. Two root
// references on top.
std::uint64_t pebble_tree_bits(std::uint64_t n, std::uint64_t nodes, std::uint64_t reds) {
  std::uint64_t L = std::max<std::uint64_t>(1, ceil_lg(n));
  std::uint64_t LL = std::max<std::uint64_t>(1, ceil_lg(L));
  return nodes * (L + 4 * LL) + reds * (L + LL) + 2 * LL;
}

std::uint64_t pebble_tree_bit_cap(std::uint64_t n) {
  std::uint64_t L = std::max<std::uint64_t>(1, ceil_lg(n));
  std::uint64_t LL = std::max<std::uint64_t>(1, ceil_lg(L));
  return 3 * L * (L + 8 * LL) / 2;
}

WorstCasePebbler::WorstCasePebbler(Provider& pv, std::uint64_t n) : pv_(pv), n_(n) {
  H_ = n == 0 ? 2 : binary_shape_for(n).depth + 1;
  if (H_ < 2) H_ = 2;
  path_.push_back({1, H_, false, true});
  cur_ = pv_.head();
  anchor_.push_back(cur_);
  account();
}

WorstCasePebbler::~WorstCasePebbler() = default;

void WorstCasePebbler::mutate(std::uint32_t k) {
  stats_.mutations_total += k;
  if (in_forward_) stats_.mutations_last += k;
}

std::size_t WorstCasePebbler::run_start_of(std::size_t i) const {
  while (!run_start(i)) --i;
  return i;
}

std::size_t WorstCasePebbler::index_of(Position w) const {
  auto it = std::lower_bound(path_.begin(), path_.end(), w,
                             [](const bin::Step& s, Position x) { return s.pos < x; });
  if (it == path_.end() || it->pos != w) return npos;
  return static_cast<std::size_t>(it - path_.begin());
}

// A right child keeps a red while the current node is the child itself or
// lies in its left subtree.
bool WorstCasePebbler::red_needed(std::size_t idx) const {
  if (idx == 0 || path_[idx].left) return false;
  return idx + 1 == path_.size() || path_[idx + 1].left;
}

Position WorstCasePebbler::red_target(std::size_t idx) const {
  const Position a = path_[idx - 1].pos;
  const Position w = path_[idx].pos;
  const std::uint32_t g = path_[idx].h;
  const Position c = position();
  const std::uint64_t x = w + (std::uint64_t{1} << (g - 1)) - c;
  return a + std::min((std::uint64_t{1} << g) - 1, 2 * x);
}

WorstCasePebbler::Red* WorstCasePebbler::find_red(Position w) {
  for (auto& r : reds_)
    if (r.w == w) return &r;
  return nullptr;
}

std::size_t WorstCasePebbler::green_count() const {
  std::size_t g = 0;
  for (const auto& r : reds_) g += r.greens.size();
  return g;
}

void WorstCasePebbler::destroy_red(std::size_t k) {
  Red& r = reds_[k];
  pending_.push_back(r.p);
  for (const auto& g : r.greens) pending_.push_back(g.p);
  reds_.erase(reds_.begin() + static_cast<std::ptrdiff_t>(k));
  mutate();
}

void WorstCasePebbler::advance_reds() {
  for (std::size_t idx = 1; idx < path_.size(); ++idx) {
    if (!red_needed(idx)) continue;
    const Position w = path_[idx].pos;
    Red* r = find_red(w);
    if (!r) {
      Pebble p = pv_.duplicate(anchor_[run_start_of(idx - 1)]);
      auto it = std::lower_bound(reds_.begin(), reds_.end(), w, [](const Red& x, Position y) { return x.w < y; });
      r = &*reds_.insert(it, Red{w, p, {}});
      mutate();
    }
    const Position target = red_target(idx);
    const Position v = path_[idx - 1].pos + 1;
    const std::uint32_t g = path_[idx].h;
    while (pv_.position(r->p) < target) {
      const Position q = pv_.position(r->p);
      if (bin::on_spine(v, g, q) && (r->greens.empty() || r->greens.back().node < q)) {
        r->greens.push_back({q, pv_.duplicate(r->p)});
        mutate();
      }
      pv_.advance(r->p);
    }
  }
}

void WorstCasePebbler::eliminate_one() {
  if (!pending_.empty()) {
    pv_.release(pending_.front());
    pending_.pop_front();
    mutate();
    return;
  }
  for (auto& r : reds_) {
    if (r.greens.empty()) continue;
    std::size_t idx = index_of(r.w);
    LTS_CHECK(idx != npos, "red pebble for a node off the path");
    if (r.greens.back().node <= red_target(idx)) continue;
    pv_.release(r.p);
    r.p = r.greens.back().p;
    r.greens.pop_back();
    mutate();
    return;
  }
}

// The current node is the last node of the tree. The old tree becomes the
// left subtree of a new root; pebbles keep their list positions and so stand
// one node ahead of where they sit.
void WorstCasePebbler::grow() {
  while (!reds_.empty()) destroy_red(reds_.size() - 1);
  const Position c = position();
  ++H_;
  std::vector<bin::Step> np;
  bin::path_to(H_, c, np);
  std::vector<Pebble> na(np.size(), kNoPebble);
  na[0] = anchor_[0];
  if (c == 1) {
    // root only; the old root is still the root
    path_ = std::move(np);
    anchor_ = std::move(na);
    return;
  }
  LTS_CHECK(np.size() == path_.size() + 1, "growth path length mismatch");
  for (std::size_t m = 2; m + 1 < np.size(); ++m) na[m] = anchor_[m - 1];
  path_ = std::move(np);
  anchor_ = std::move(na);
  mutate();
}

void WorstCasePebbler::forward() {
  in_forward_ = true;
  stats_.mutations_last = 0;
  if (path_.back().h >= 2) {
    const bin::Step c = path_.back();
    if (run_start(path_.size() - 1)) {
      Pebble p = pv_.duplicate(cur_);
      try {
        pv_.advance(p);
      } catch (...) {
        pv_.release(p);
        in_forward_ = false;
        throw;
      }
      cur_ = p;
      mutate();
    } else {
      pv_.advance(cur_);
    }
    path_.push_back({c.pos + 1, c.h - 1, true, false});
    anchor_.push_back(kNoPebble);
  } else {
    std::size_t vi = path_.size();
    while (--vi > 0)
      if (path_[vi].left) break;
    if (vi == 0) {
      if (pv_.length() && position() >= *pv_.length()) {
        in_forward_ = false;
        throw EndOfList(position());
      }
      grow();
      vi = path_.size() - 1;
      LTS_CHECK(path_[vi].left, "growth did not leave a left leaf");
    }
    const bin::Step a = path_[vi - 1];
    const std::uint32_t g = path_[vi].h;
    const Position w = a.pos + (std::uint64_t{1} << g);
    Pebble p = pv_.duplicate(cur_);
    try {
      pv_.advance(p);
    } catch (...) {
      pv_.release(p);
      in_forward_ = false;
      throw;
    }
    Red red{w, cur_, {}};
    for (std::size_t m = vi + 1; m + 1 < path_.size(); ++m) red.greens.push_back({path_[m].pos, anchor_[m]});
    path_.resize(vi);
    anchor_.resize(vi);
    path_.push_back({w, g, false, false});
    anchor_.push_back(p);
    cur_ = p;
    mutate(2);  // new current, spine handed to the red
    for (std::size_t k = reds_.size(); k-- > 0;) {
      std::size_t idx = index_of(reds_[k].w);
      if (idx == npos || !red_needed(idx)) destroy_red(k);
    }
    reds_.push_back(std::move(red));
  }
  if (position() > farthest_) farthest_ = position();
  eliminate_one();
  in_forward_ = false;
  stats_.mutations_max = std::max(stats_.mutations_max, stats_.mutations_last);
  account();
}

void WorstCasePebbler::back() {
  if (path_.size() == 1) throw BadRequest("back step at position 1");
  while (!pending_.empty()) {
    pv_.release(pending_.front());
    pending_.pop_front();
    mutate();
  }
  const bin::Step c = path_.back();
  if (c.left) {
    pv_.release(cur_);
    path_.pop_back();
    anchor_.pop_back();
    const std::size_t pi = path_.size() - 1;
    if (run_start(pi)) {
      cur_ = anchor_[pi];
      while (pv_.position(cur_) < path_[pi].pos) pv_.advance(cur_);
    } else {
      cur_ = pv_.duplicate(anchor_[run_start_of(pi)]);
      while (pv_.position(cur_) < path_[pi].pos) pv_.advance(cur_);
    }
  } else {
    const std::uint32_t g = c.h;
    Red* r = find_red(c.pos);
    LTS_CHECK(r, "no red pebble for the right child being left");
    Red red = std::move(*r);
    reds_.erase(reds_.begin() + (r - reds_.data()));
    pv_.release(cur_);
    path_.pop_back();
    anchor_.pop_back();
    const Position v = path_.back().pos + 1;
    LTS_CHECK(pv_.position(red.p) == c.pos - 1, "red pebble not at the end of its green path");
    path_.push_back({v, g, true, false});
    anchor_.push_back(kNoPebble);
    Position s = v;
    std::uint32_t h = g;
    for (std::uint32_t m = 1; m < g; ++m) {
      s += std::uint64_t{1} << (h - 1);
      --h;
      path_.push_back({s, h, false, false});
      if (m + 1 < g) {
        LTS_CHECK(m - 1 < red.greens.size() && red.greens[m - 1].node == s, "green path incomplete at hand-off");
        anchor_.push_back(red.greens[m - 1].p);
      } else {
        anchor_.push_back(red.p);
      }
    }
    LTS_CHECK(red.greens.size() + 2 == std::max<std::uint32_t>(g, 2), "stray green pebbles at hand-off");
    cur_ = red.p;
  }
  for (std::size_t k = 0; k < reds_.size(); ++k) {
    std::size_t idx = index_of(reds_[k].w);
    LTS_CHECK(idx != npos && red_needed(idx), "red pebble outlived its subtree");
  }
  advance_reds();
  account();
}

void WorstCasePebbler::account() {
  std::uint64_t nodes = pending_.size();
  for (std::size_t i = 0; i < anchor_.size(); ++i)
    if (anchor_[i] != kNoPebble) ++nodes;
  if (!run_start(path_.size() - 1)) ++nodes;
  for (const auto& r : reds_) nodes += 1 + r.greens.size();
  stats_.nodes = nodes;
  stats_.reds = reds_.size();
  std::uint64_t n_eff = std::max<std::uint64_t>(n_, farthest_);
  stats_.bits = pebble_tree_bits(n_eff, nodes, reds_.size());
  stats_.nodes_max = std::max(stats_.nodes_max, nodes);
  stats_.reds_max = std::max<std::uint64_t>(stats_.reds_max, reds_.size());
  stats_.greens_max = std::max<std::uint64_t>(stats_.greens_max, green_count());
  stats_.bits_max = std::max(stats_.bits_max, stats_.bits);
}

void WorstCasePebbler::pebbled(std::vector<Pebble>& out) const {
  out.clear();
  for (Pebble p : anchor_)
    if (p != kNoPebble) out.push_back(p);
  if (!run_start(path_.size() - 1)) out.push_back(cur_);
  for (const auto& r : reds_) {
    out.push_back(r.p);
    for (const auto& g : r.greens) out.push_back(g.p);
  }
  out.insert(out.end(), pending_.begin(), pending_.end());
}

std::vector<std::pair<Position, Position>> WorstCasePebbler::blue_nodes() const {
  std::vector<std::pair<Position, Position>> out;
  for (std::size_t i = 0; i < anchor_.size(); ++i)
    if (anchor_[i] != kNoPebble) out.push_back({path_[i].pos, pv_.position(anchor_[i])});
  if (!run_start(path_.size() - 1)) out.push_back({position(), pv_.position(cur_)});
  return out;
}

void WorstCasePebbler::check() const {
  LTS_CHECK(pv_.position(cur_) == position(), "current pebble off the current node");
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (run_start(i)) {
      LTS_CHECK(anchor_[i] != kNoPebble, "run start without a pebble");
      LTS_CHECK(pv_.position(anchor_[i]) <= path_[i].pos, "anchor ahead of its node");
    } else {
      LTS_CHECK(anchor_[i] == kNoPebble, "pebble inside a left run");
    }
  }
  if (run_start(path_.size() - 1)) LTS_CHECK(cur_ == anchor_.back(), "current run start not shared");
  std::size_t k = 0;
  for (std::size_t idx = 1; idx < path_.size(); ++idx) {
    if (!red_needed(idx)) continue;
    LTS_CHECK(k < reds_.size() && reds_[k].w == path_[idx].pos, "missing red pebble");
    const Red& r = reds_[k++];
    const Position v = path_[idx - 1].pos + 1;
    const std::uint32_t g = path_[idx].h;
    LTS_CHECK(pv_.position(r.p) <= r.w - 1, "red pebble past its green path");
    Position prev = 0;
    for (const auto& gr : r.greens) {
      LTS_CHECK(bin::on_spine(v, g, gr.node) && gr.node > prev, "green pebble off its spine");
      LTS_CHECK(pv_.position(gr.p) <= gr.node, "green pebble ahead of its node");
      prev = gr.node;
    }
  }
  LTS_CHECK(k == reds_.size(), "red pebble without a purpose");
}

}  // namespace lts
