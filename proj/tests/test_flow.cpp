#include <doctest.h>

#include "hyfac/flow.hpp"

using namespace hyfac;

TEST_CASE("max flow on a small network") {
  FlowNetwork net(4);
  net.add_arc(0, 1, 0, 3);
  net.add_arc(0, 2, 0, 2);
  net.add_arc(1, 2, 0, 1);
  net.add_arc(1, 3, 0, 2);
  net.add_arc(2, 3, 0, 3);
  CHECK(net.max_flow(0, 3) == 5);
}

TEST_CASE("feasible flow respects lower bounds") {
  // s -> a [2, 3], a -> t [0, 5], s -> b [0, 4], b -> t [1, 1]
  FlowNetwork net(4);
  const auto sa = net.add_arc(0, 1, 2, 3);
  const auto at = net.add_arc(1, 3, 0, 5);
  const auto sb = net.add_arc(0, 2, 0, 4);
  const auto bt = net.add_arc(2, 3, 1, 1);
  REQUIRE(net.find_feasible(0, 3));
  CHECK(net.flow(sa) >= 2);
  CHECK(net.flow(sa) <= 3);
  CHECK(net.flow(at) == net.flow(sa));
  CHECK(net.flow(sb) == 1);
  CHECK(net.flow(bt) == 1);
}

TEST_CASE("infeasible lower bounds are detected") {
  // a must receive at least 3 but can pass on at most 2.
  FlowNetwork net(3);
  net.add_arc(0, 1, 3, 4);
  net.add_arc(1, 2, 0, 2);
  CHECK_FALSE(net.find_feasible(0, 2));
}

TEST_CASE("arc validation") {
  FlowNetwork net(2);
  CHECK_THROWS_AS(net.add_arc(0, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(net.add_arc(0, 1, 2, 1), DomainError);
  CHECK_THROWS_AS(net.add_arc(0, 1, -1, 1), DomainError);
  CHECK(net.add_node() == 2);
}
