#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "lts/vtree.hpp"
#include "oracles.hpp"

using namespace lts;

TEST_CASE("vtree: shapes and subtree sizes") {
  auto s7 = make_shape(2, 2);
  CHECK(s7.size == 7);
  CHECK(subtree_size(s7, node_at(s7, 1)) == 7);
  CHECK(subtree_size(s7, node_at(s7, 3)) == 1);
  auto s15 = make_shape(2, 3);
  CHECK(subtree_size(s15, node_at(s15, 9)) == 7);
  CHECK(binary_shape_for(4095).size == 4095);
  CHECK(binary_shape_for(4096).size == 8191);
  auto k3 = kary_shape_for(4096, 3);
  CHECK(k3.arity == 16);
  CHECK(k3.depth == 3);
  CHECK(int_root_ceil(4096, 2) == 64);
  CHECK(int_root_ceil(4097, 2) == 65);
  CHECK(int_root_ceil((std::uint64_t{1} << 62) + 1, 2) == (std::uint64_t{1} << 31) + 1);
  CHECK_THROWS_AS(kary_shape_for(100, 1), BadRequest);
}

TEST_CASE("vtree: child and parent") {
  auto s7 = make_shape(2, 2);
  auto root = node_at(s7, 1);
  CHECK(child(s7, root, 0).preorder == 2);
  CHECK(child(s7, root, 1).preorder == 5);
  CHECK(parent(s7, node_at(s7, 6)).preorder == 5);
  auto s15 = make_shape(2, 3);
  CHECK(child(s15, node_at(s15, 2), 1).preorder == 6);
  CHECK_THROWS_AS(parent(s7, root), BadRequest);
  CHECK_THROWS_AS(child(s7, node_at(s7, 3), 0), BadRequest);
}

TEST_CASE("vtree: successor and predecessor") {
  auto s7 = make_shape(2, 2);
  CHECK(preorder_succ(s7, node_at(s7, 3)).preorder == 4);
  CHECK(preorder_succ(s7, node_at(s7, 4)).preorder == 5);
  CHECK_THROWS_AS(preorder_succ(s7, node_at(s7, 7)), BadRequest);
  CHECK(preorder_pred(s7, node_at(s7, 2)).preorder == 1);
  CHECK(preorder_pred(s7, node_at(s7, 5)).preorder == 4);
  auto s15 = make_shape(2, 3);
  CHECK(preorder_pred(s15, node_at(s15, 9)).preorder == 8);
  CHECK_THROWS_AS(preorder_pred(s7, node_at(s7, 1)), BadRequest);
}

TEST_CASE("vtree: blue paths") {
  auto s7 = make_shape(2, 2);
  auto pre = [](const std::vector<NodeId>& p) {
    std::vector<Position> out;
    for (auto& v : p) out.push_back(v.preorder);
    return out;
  };
  CHECK(pre(blue_path(s7, node_at(s7, 4))) == std::vector<Position>{1, 2, 4});
  CHECK(pre(blue_path(s7, node_at(s7, 1))) == std::vector<Position>{1});
  auto s15 = make_shape(2, 3);
  CHECK(pre(blue_path(s15, node_at(s15, 11))) == std::vector<Position>{1, 9, 10, 11});
}

TEST_CASE("vtree: mirror budgets") {
  auto s7 = make_shape(2, 2);
  auto m = mirror_info(s7, blue_path(s7, node_at(s7, 5)));
  REQUIRE(m.size() == 1);
  CHECK(m[0].left_child == 2);
  CHECK(m[0].last);
  CHECK(m[0].budget == 2);  // right subpath 2 -> 4
  auto s15 = make_shape(2, 3);
  // leftmost leaf: every path node is a left child, nothing hangs off
  CHECK(mirror_info(s15, blue_path(s15, node_at(s15, 4))).empty());
  // rightmost leaf: one entry per right child, only the deepest is unlimited
  auto r = mirror_info(s15, blue_path(s15, node_at(s15, 15)));
  REQUIRE(r.size() == 3);
  CHECK(r[0].left_child == 2);
  CHECK(r[0].budget == 1);
  CHECK(!r[0].last);
  CHECK(r[2].left_child == 14);
  CHECK(r[2].last);
  // current 12: path 1,9,10,12; 9's run is 9,10 so node 2 may keep 2 greens
  auto q = mirror_info(s15, blue_path(s15, node_at(s15, 12)));
  REQUIRE(q.size() == 2);
  CHECK(q[0].left_child == 2);
  CHECK(q[0].budget == 2);
  CHECK(q[1].left_child == 11);
  CHECK(q[1].last);
}

TEST_CASE("vtree: grow shifts numbering by one") {
  auto s7 = make_shape(2, 2);
  auto g = grow(s7);
  CHECK(g.shape.size == 15);
  CHECK(7 + g.shift == 8);
  CHECK(1 + g.shift == 2);
  // the old right spine lands on the right spine of the new left subtree
  oracle::ExplicitTree small(2, 2), big(2, 3);
  auto old_spine = small.root_path(7);
  auto new_path = big.root_path(8);
  REQUIRE(new_path.size() == old_spine.size() + 1);
  CHECK(new_path[0] == 1);
  for (std::size_t i = 0; i < old_spine.size(); ++i) CHECK(new_path[i + 1] == old_spine[i] + 1);
}

TEST_CASE("vtree: brute-force equivalence for arity 2..4, depth <= 6") {
  for (std::uint32_t t = 2; t <= 4; ++t) {
    for (std::uint32_t d = 0; d <= 6; ++d) {
      oracle::ExplicitTree ex(t, d);
      auto s = make_shape(t, d);
      REQUIRE(s.size == ex.nodes.size());
      for (const auto& n : ex.nodes) {
        NodeId v = node_at(s, n.pre);
        REQUIRE(v.path == n.path);
        REQUIRE(node_from_path(s, n.path).preorder == n.pre);
        if (n.parent >= 0) REQUIRE(parent(s, v).preorder == ex.nodes[n.parent].pre);
        for (std::size_t j = 0; j < n.kids.size(); ++j)
          REQUIRE(child(s, v, static_cast<std::uint32_t>(j)).preorder == ex.nodes[n.kids[j]].pre);
        if (n.pre < s.size) {
          auto nx = preorder_succ(s, v);
          REQUIRE(nx.preorder == n.pre + 1);
          REQUIRE(preorder_pred(s, nx).preorder == n.pre);
        }
        if (n.pre > 1) REQUIRE(preorder_pred(s, v).preorder == ex.pred(n.pre));
        auto bp = blue_path(s, v);
        auto op = ex.root_path(n.pre);
        REQUIRE(bp.size() == op.size());
        for (std::size_t i = 0; i < bp.size(); ++i) REQUIRE(bp[i].preorder == op[i]);
      }
    }
  }
}

TEST_CASE("vtree: right-child subtree sum stays below n log n / 2") {
  for (std::uint32_t d = 1; d <= 9; ++d) {
    oracle::ExplicitTree ex(2, d);
    auto s = make_shape(2, d);
    auto c = right_child_subtree_sum(s);
    CHECK(c == oracle::right_subtree_sum(ex));
    double n = static_cast<double>(s.size);
    CHECK(static_cast<double>(c) < n * std::log2(n) / 2);
  }
}

TEST_CASE("vtree: binary fast path matches the generic one") {
  std::vector<bin::Step> st;
  for (std::uint32_t H = 1; H <= 7; ++H) {
    auto s = make_shape(2, H - 1);
    for (Position x = 1; x <= s.size; ++x) {
      bin::path_to(H, x, st);
      auto bp = blue_path(s, node_at(s, x));
      REQUIRE(st.size() == bp.size());
      for (std::size_t i = 0; i < st.size(); ++i) {
        REQUIRE(st[i].pos == bp[i].preorder);
        REQUIRE(st[i].h == H - bp[i].depth);
        if (i > 0) REQUIRE(st[i].left == (bp[i].path.back() == 0));
      }
      REQUIRE(bin::height_of(H, x) == st.back().h);
      // spine test against the explicit right subpath
      Position q = x;
      std::uint32_t h = st.back().h;
      for (std::uint32_t m = 1; m < h; ++m) {
        q += std::uint64_t{1} << (h - m);
        REQUIRE(bin::on_spine(x, h, q));
      }
      for (Position y = x; y <= s.size && y < x + (std::uint64_t{1} << h); ++y) {
        bool expect = false;
        Position z = x;
        for (std::uint32_t m = 1; m < h; ++m) {
          z += std::uint64_t{1} << (h - m);
          if (z == y) expect = true;
        }
        REQUIRE(bin::on_spine(x, h, y) == expect);
      }
    }
  }
}
