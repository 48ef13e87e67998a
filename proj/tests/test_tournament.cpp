#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wsne/tournament.hpp"

#include <random>
#include <stdexcept>

using namespace wsne;

namespace {

Tournament three_cycle() {
  // pairs (0,1),(0,2),(1,2): 0->1, 2->0, 1->2
  return Tournament::from_orientation(3, "101");
}

}  // namespace

TEST_CASE("NodeSet validation") {
  CHECK_NOTHROW(NodeSet({0, 3, 7}));
  CHECK_THROWS_AS(NodeSet({3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(NodeSet({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(NodeSet({-1}), std::invalid_argument);
  CHECK(NodeSet::from_unsorted({5, 1, 5, 3}).ids() == std::vector<int>{1, 3, 5});
}

TEST_CASE("random tournament basics") {
  CHECK_THROWS_AS(Tournament::random(0, 1), std::invalid_argument);

  auto t1 = Tournament::random(1, 9);
  CHECK(t1.size() == 1);
  CHECK(t1.orientation_string().empty());

  auto t3 = Tournament::random(3, 1234);
  int arcs = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && t3.arc(i, j)) ++arcs;
  CHECK(arcs == 3);

  // determinism contract
  auto a = Tournament::random(7, 42);
  auto b = Tournament::random(7, 42);
  CHECK(a.orientation_string() == b.orientation_string());
  CHECK(a == b);
  CHECK(Tournament::random(7, 43).orientation_string() != a.orientation_string());
}

TEST_CASE("every pair is oriented exactly once") {
  std::mt19937_64 seeds(7);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(seeds() % 14);
    auto t = Tournament::random(n, seeds());
    for (int i = 0; i < n; ++i) {
      CHECK(!t.arc(i, i));
      for (int j = i + 1; j < n; ++j) CHECK(t.arc(i, j) != t.arc(j, i));
    }
  }
}

TEST_CASE("paley tournament") {
  CHECK_THROWS_AS(Tournament::paley(5), std::invalid_argument);   // 1 mod 4
  CHECK_THROWS_AS(Tournament::paley(15), std::invalid_argument);  // composite
  CHECK_THROWS_AS(Tournament::paley(2), std::invalid_argument);

  auto p3 = Tournament::paley(3);
  CHECK(p3.arc(0, 1));
  CHECK(p3.arc(1, 2));
  CHECK(p3.arc(2, 0));

  auto p7 = Tournament::paley(7);
  // squares mod 7 are {1, 2, 4}
  CHECK(p7.arc(0, 1));
  CHECK(p7.arc(0, 2));
  CHECK(p7.arc(0, 4));
  CHECK_FALSE(p7.arc(0, 3));
  CHECK_FALSE(p7.arc(0, 5));
  CHECK_FALSE(p7.arc(0, 6));
  for (int v = 0; v < 7; ++v) {
    CHECK(p7.out_degree(v) == 3);
    CHECK(p7.in_degree(v) == 3);
  }
}

TEST_CASE("paley is arc-transitive under +1 relabeling") {
  for (int q : {3, 7, 11, 19}) {
    auto t = Tournament::paley(q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        if (i != j) CHECK(t.arc(i, j) == t.arc((i + 1) % q, (j + 1) % q));
  }
}

TEST_CASE("dominates") {
  auto t = three_cycle();
  CHECK(dominates(t, 0, NodeSet({1})));
  CHECK_FALSE(dominates(t, 0, NodeSet({0, 1})));  // member of the set
  CHECK_FALSE(dominates(t, 1, NodeSet({0})));

  auto p7 = Tournament::paley(7);
  CHECK(dominates(p7, 0, NodeSet({1, 2, 4})));
  CHECK_THROWS_AS(dominates(p7, 7, NodeSet({1})), std::invalid_argument);
  CHECK_THROWS_AS(dominates(p7, 0, NodeSet({9})), std::invalid_argument);
}

TEST_CASE("find_dominator") {
  auto t = three_cycle();
  CHECK(find_dominator(t, NodeSet({1})) == 0);
  CHECK_FALSE(find_dominator(t, NodeSet({0, 1, 2})).has_value());

  // every pair in Paley-7 has a dominator; cross-check against raw loops
  auto p7 = Tournament::paley(7);
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      auto d = find_dominator(p7, NodeSet({a, b}));
      REQUIRE(d.has_value());
      CHECK(p7.arc(*d, a));
      CHECK(p7.arc(*d, b));
      for (int u = 0; u < *d; ++u) CHECK(!(p7.arc(u, a) && p7.arc(u, b)));
    }
}

TEST_CASE("is_m_dominated on Paley-7") {
  auto p7 = Tournament::paley(7);
  CHECK(is_m_dominated(p7, 2).dominated);

  auto r3 = is_m_dominated(p7, 3);
  CHECK_FALSE(r3.dominated);
  REQUIRE(r3.witness.has_value());
  // frozen smallest witness in size-then-lex order
  CHECK(r3.witness->ids() == std::vector<int>{0, 1, 2});
  // and it is indeed undominated
  for (int u = 0; u < 7; ++u)
    CHECK_FALSE(dominates(p7, u, *r3.witness));
}

TEST_CASE("m = 1 domination is exactly positive in-degree everywhere") {
  std::mt19937_64 seeds(21);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(seeds() % 10);
    auto t = Tournament::random(n, seeds());
    bool every_in = true;
    for (int v = 0; v < n; ++v) every_in = every_in && t.in_degree(v) >= 1;
    CHECK(is_m_dominated(t, 1).dominated == every_in);
  }
}

TEST_CASE("is_m_dominated is monotone and order-independent across jobs") {
  std::mt19937_64 seeds(5);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 5 + static_cast<int>(seeds() % 8);
    auto t = Tournament::random(n, seeds());
    bool prev = true;
    for (int m = 1; m < n; ++m) {
      auto r = is_m_dominated(t, m);
      if (!prev) CHECK_FALSE(r.dominated);  // false stays false as m grows
      prev = r.dominated;

      auto r4 = is_m_dominated(t, m, 4);
      CHECK(r.dominated == r4.dominated);
      CHECK((r.witness ? r.witness->ids() : std::vector<int>{}) ==
            (r4.witness ? r4.witness->ids() : std::vector<int>{}));
    }
  }
}

TEST_CASE("is_m_dominated parameter validation") {
  auto p7 = Tournament::paley(7);
  CHECK_THROWS_AS(is_m_dominated(p7, 0), std::invalid_argument);
  CHECK_THROWS_AS(is_m_dominated(p7, 7), std::invalid_argument);
}

TEST_CASE("orientation round trip") {
  auto t = Tournament::random(9, 77);
  auto back = Tournament::from_orientation(9, t.orientation_string());
  CHECK(back == t);
  CHECK_THROWS_AS(Tournament::from_orientation(3, "11"), std::invalid_argument);
  CHECK_THROWS_AS(Tournament::from_orientation(3, "1x0"), std::invalid_argument);
}
