#include "lts/kary.hpp"

#include <algorithm>

namespace lts {

KaryPebbler::KaryPebbler(Provider& pv, std::uint64_t n, std::uint32_t k, KaryMode mode)
    : pv_(pv), mode_(mode) {
  std::uint32_t lg = 0;
  while ((std::uint64_t{1} << lg) < n) ++lg;
  if (k < 2 || k > std::max<std::uint32_t>(2, lg)) throw BadRequest("k must lie in [2, max(2, ceil(lg n))]");
  shape_ = kary_shape_for(n, k);
  d_ = shape_.arity;
  for (std::uint32_t l = 0; l <= shape_.depth + 1; ++l) sizes_.push_back(l <= shape_.depth ? level_size(shape_, l) : 0);
  blue_.push_back({{1, 0, 0}, pv_.head(), {}, {}});
}

KaryPebbler::~KaryPebbler() = default;

void KaryPebbler::release_green(Green& g) {
  pv_.release(g.p);
  for (Pebble s : g.sibs) pv_.release(s);
  g.sibs.clear();
}

// Dense: the nearest left sibling tops the green path; the others stay with
// the blue node.
void KaryPebbler::split_siblings(Blue& b, std::vector<Pebble>&& sibs) {
  if (mode_ == KaryMode::Sparse || b.node.index == 0) {
    LTS_CHECK(sibs.empty(), "siblings given to a first child");
    return;
  }
  LTS_CHECK(sibs.size() == b.node.index, "left sibling count mismatch");
  b.green.push_back({sibs.back(), {}});
  sibs.pop_back();
  b.lsibs = std::move(sibs);
}

std::size_t KaryPebbler::budget(std::size_t i) const {
  const Blue& b = blue_[i];
  std::size_t full = shape_.depth - b.node.depth + 1;
  std::size_t run = 1;
  std::size_t j = i + 1;
  while (j < blue_.size() && blue_[j].node.index == 0) {
    ++run;
    ++j;
  }
  if (j == blue_.size()) return full;  // last
  return std::min(run, full);
}

void KaryPebbler::enforce_budgets() {
  for (std::size_t i = 1; i < blue_.size(); ++i) {
    auto& g = blue_[i].green;
    std::size_t b = budget(i);
    while (g.size() > b) {
      release_green(g.back());
      g.pop_back();
    }
  }
}

void KaryPebbler::forward() {
  const Blue& c = blue_.back();
  if (c.node.depth < shape_.depth) {
    Pebble p = pv_.duplicate(c.p);
    pv_.advance(p);
    blue_.push_back({child(c.node, 0), p, {}, {}});
    return;
  }
  std::size_t l = blue_.size();
  while (--l > 0)
    if (blue_[l].node.index + 1 < d_) break;
  if (l == 0) throw EndOfList(c.node.pos);

  Blue y;
  y.node = {blue_[l].node.pos + sub(blue_[l].node.depth), blue_[l].node.depth, blue_[l].node.index + 1};
  std::vector<Pebble> ysibs;
  for (std::size_t i = l; i < blue_.size(); ++i) {
    Blue& b = blue_[i];
    std::vector<Pebble> sibs;
    if (mode_ == KaryMode::Dense) {
      sibs = std::move(b.lsibs);
      if (!b.green.empty()) {
        sibs.push_back(b.green.front().p);
        b.green.front().p = kNoPebble;
      }
    }
    for (auto& g : b.green)
      if (g.p != kNoPebble) release_green(g);
      else
        for (Pebble s : g.sibs) pv_.release(s);
    if (i == l)
      ysibs = std::move(sibs);
    else
      y.green.push_back({b.p, std::move(sibs)});
  }
  y.green.insert(y.green.begin(), Green{blue_[l].p, {}});
  y.p = pv_.duplicate(blue_.back().p);
  pv_.advance(y.p);
  blue_.resize(l);
  if (mode_ == KaryMode::Dense) y.lsibs = std::move(ysibs);
  blue_.push_back(std::move(y));
  enforce_budgets();
}

void KaryPebbler::back() {
  if (blue_.size() == 1) throw BadRequest("back step at position 1");
  Blue c = std::move(blue_.back());
  blue_.pop_back();
  pv_.release(c.p);
  if (c.node.index == 0) return;

  const Blue& a = blue_.back();
  std::vector<Node> spine{{c.node.pos - sub(c.node.depth), c.node.depth, c.node.index - 1}};
  while (spine.back().depth < shape_.depth) spine.push_back(child(spine.back(), d_ - 1));
  auto& green = c.green;
  LTS_CHECK(green.size() <= spine.size(), "green path longer than its subpath");

  if (green.size() < spine.size()) {
    LTS_CHECK(mode_ == KaryMode::Sparse || !green.empty(), "dense green path lost its top");
    Pebble w = pv_.duplicate(green.empty() ? a.p : green.back().p);
    for (std::size_t s = green.size(); s < spine.size(); ++s) {
      std::vector<Pebble> sibs;
      if (mode_ == KaryMode::Dense) {
        for (std::uint32_t j = 0; j + 1 < d_; ++j) {
          Position at = child(spine[s - 1], j).pos;
          while (pv_.position(w) < at) pv_.advance(w);
          sibs.push_back(pv_.duplicate(w));
        }
      }
      while (pv_.position(w) < spine[s].pos) pv_.advance(w);
      green.push_back({s + 1 == spine.size() ? w : pv_.duplicate(w), std::move(sibs)});
    }
  }

  for (std::size_t s = 0; s < spine.size(); ++s) {
    Blue b;
    b.node = spine[s];
    b.p = green[s].p;
    LTS_CHECK(pv_.position(b.p) == b.node.pos, "green pebble off its node");
    split_siblings(b, s == 0 ? std::move(c.lsibs) : std::move(green[s].sibs));
    blue_.push_back(std::move(b));
  }
  enforce_budgets();
}

void KaryPebbler::pebbled(std::vector<Pebble>& out) const {
  out.clear();
  for (const auto& b : blue_) {
    out.push_back(b.p);
    out.insert(out.end(), b.lsibs.begin(), b.lsibs.end());
    for (const auto& g : b.green) {
      out.push_back(g.p);
      out.insert(out.end(), g.sibs.begin(), g.sibs.end());
    }
  }
}

std::size_t KaryPebbler::green_count() const {
  std::size_t n = 0;
  for (const auto& b : blue_) n += b.green.size();
  return n;
}

void KaryPebbler::check() const {
  for (std::size_t i = 0; i < blue_.size(); ++i) {
    const Blue& b = blue_[i];
    LTS_CHECK(pv_.position(b.p) == b.node.pos, "blue pebble off its node");
    if (i == 0) continue;
    const Node& par = blue_[i - 1].node;
    LTS_CHECK(child(par, b.node.index).pos == b.node.pos, "blue path broken");
    if (b.node.index == 0) {
      LTS_CHECK(b.green.empty() && b.lsibs.empty(), "first child with green path");
      continue;
    }
    LTS_CHECK(b.green.size() <= budget(i), "green path over budget");
    if (mode_ == KaryMode::Dense) {
      LTS_CHECK(!b.green.empty() && b.lsibs.size() + 1 == b.node.index, "dense siblings missing");
      for (std::uint32_t j = 0; j < b.lsibs.size(); ++j)
        LTS_CHECK(pv_.position(b.lsibs[j]) == child(par, j).pos, "sibling pebble off its node");
    }
    Node g = child(par, b.node.index - 1);
    for (std::size_t s = 0; s < b.green.size(); ++s) {
      if (s > 0) {
        Node up = g;
        g = child(up, d_ - 1);
        if (mode_ == KaryMode::Dense) {
          LTS_CHECK(b.green[s].sibs.size() + 1 == d_, "dense green siblings missing");
          for (std::uint32_t j = 0; j + 1 < d_; ++j)
            LTS_CHECK(pv_.position(b.green[s].sibs[j]) == child(up, j).pos, "green sibling off its node");
        }
      }
      LTS_CHECK(pv_.position(b.green[s].p) == g.pos, "green pebble off its node");
    }
  }
}

}  // namespace lts
