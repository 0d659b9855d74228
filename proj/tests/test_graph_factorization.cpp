#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "hyfac/graph_factorization.hpp"
#include "support.hpp"

using namespace hyfac;

namespace {

/// Per-color degree of every vertex, recounted from the edge list.
std::vector<std::vector<Count>> color_degrees(const GraphColoring& gc) {
  std::vector<std::vector<Count>> deg(static_cast<std::size_t>(gc.k),
                                      std::vector<Count>(static_cast<std::size_t>(gc.n), 0));
  for (const auto& e : gc.edges) {
    ++deg[static_cast<std::size_t>(e.color)][static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.color)][static_cast<std::size_t>(e.v)];
  }
  return deg;
}

void check_factorization(int n, Count lambda, const std::vector<Count>& r) {
  const auto gc = factorize_complete_graph(n, lambda, r);
  const auto deg = color_degrees(gc);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (int v = 0; v < n; ++v) CHECK(deg[i][static_cast<std::size_t>(v)] == r[i]);
  std::map<std::pair<int, int>, Count> copies;
  for (const auto& e : gc.edges) {
    CHECK(e.u < e.v);
    ++copies[{e.u, e.v}];
  }
  CHECK(copies.size() == static_cast<std::size_t>(n * (n - 1) / 2));
  for (const auto& [pair, c] : copies) CHECK(c == lambda);
}

} // namespace

TEST_CASE("check_graph_conditions") {
  CHECK(check_graph_conditions(4, 1, {1, 1, 1}).passed);
  CHECK(check_graph_conditions(5, 1, {2, 2}).passed); // 2 + 2 = 1 * (5 - 1), 2 * 5 even
  const auto odd = check_graph_conditions(5, 1, {1, 3});
  CHECK_FALSE(odd.passed);
  CHECK(odd.violations.size() == 2);
  CHECK_FALSE(check_graph_conditions(4, 1, {1, 1}).passed);
  CHECK_FALSE(check_graph_conditions(1, 1, {1}).passed);
  CHECK_FALSE(check_graph_conditions(4, 1, {}).passed);
  CHECK_FALSE(check_graph_conditions(4, 1, {3, 0}).passed);
}

TEST_CASE("round robin matchings partition K_n for even n") {
  for (int n = 2; n <= 14; n += 2) {
    const auto rounds = round_robin_matchings(n);
    CHECK(rounds.size() == static_cast<std::size_t>(n - 1));
    std::set<std::pair<int, int>> seen;
    for (const auto& m : rounds) {
      std::set<int> covered;
      for (auto [a, b] : m) {
        CHECK(a < b);
        covered.insert(a);
        covered.insert(b);
        CHECK(seen.insert({a, b}).second);
      }
      CHECK(covered.size() == static_cast<std::size_t>(n));
    }
    CHECK(seen.size() == static_cast<std::size_t>(n * (n - 1) / 2));
  }
  CHECK_THROWS_AS(round_robin_matchings(5), DomainError);
}

TEST_CASE("Walecki cycles partition K_n for odd n") {
  for (int n = 3; n <= 15; n += 2) {
    const auto cycles = walecki_cycles(n);
    CHECK(cycles.size() == static_cast<std::size_t>((n - 1) / 2));
    std::set<std::pair<int, int>> seen;
    for (const auto& c : cycles) {
      CHECK(std::set<int>(c.begin(), c.end()).size() == static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < c.size(); ++i) {
        int a = c[i], b = c[(i + 1) % c.size()];
        CHECK(seen.insert({std::min(a, b), std::max(a, b)}).second);
      }
    }
    CHECK(seen.size() == static_cast<std::size_t>(n * (n - 1) / 2));
  }
  CHECK_THROWS_AS(walecki_cycles(4), DomainError);
}

TEST_CASE("factorize_complete_graph examples") {
  SUBCASE("n = 2, lambda = 3, r = (3)") {
    const auto gc = factorize_complete_graph(2, 3, {3});
    CHECK(gc.edges.size() == 3);
    for (const auto& e : gc.edges) CHECK(e.color == 0);
    check_factorization(2, 3, {3});
  }
  SUBCASE("K_4 into three perfect matchings") {
    const auto gc = factorize_complete_graph(4, 1, {1, 1, 1});
    for (int c = 0; c < 3; ++c) {
      std::set<int> covered;
      int size = 0;
      for (const auto& e : gc.edges)
        if (e.color == c) {
          covered.insert(e.u);
          covered.insert(e.v);
          ++size;
        }
      CHECK(size == 2);
      CHECK(covered.size() == 4);
    }
  }
  SUBCASE("2 K_3 into two triangles") {
    const auto gc = factorize_complete_graph(3, 2, {2, 2});
    for (int c = 0; c < 2; ++c) {
      std::set<std::pair<int, int>> pairs;
      for (const auto& e : gc.edges)
        if (e.color == c) pairs.insert({e.u, e.v});
      CHECK(pairs == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    }
    check_factorization(3, 2, {2, 2});
  }
  SUBCASE("precondition violation carries the report") {
    try {
      factorize_complete_graph(5, 1, {1, 3});
      FAIL("expected GraphConditionError");
    } catch (const GraphConditionError& e) {
      CHECK_FALSE(e.report().passed);
    }
    CHECK_THROWS_AS(factorize_complete_graph(1, 1, {1}), GraphConditionError);
  }
}

TEST_CASE("random factorizations are regular, complete, and deterministic") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 9; ++n)
    for (Count lambda = 1; lambda <= 3; ++lambda)
      for (int trial = 0; trial < 5; ++trial) {
        const Count step = n % 2 == 0 ? 1 : 2;
        const auto r = testing::random_composition(rng, lambda * (n - 1), step);
        check_factorization(n, lambda, r);
        const auto a = factorize_complete_graph(n, lambda, r);
        const auto b = factorize_complete_graph(n, lambda, r);
        REQUIRE(a.edges.size() == b.edges.size());
        for (std::size_t i = 0; i < a.edges.size(); ++i) {
          CHECK(a.edges[i].u == b.edges[i].u);
          CHECK(a.edges[i].v == b.edges[i].v);
          CHECK(a.edges[i].color == b.edges[i].color);
        }
      }
}
