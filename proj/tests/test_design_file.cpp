#include <doctest.h>

#include <map>
#include <sstream>

#include "hyfac/base_construction.hpp"
#include "hyfac/design_file.hpp"
#include "hyfac/pipeline.hpp"
#include "hyfac/verifier.hpp"

using namespace hyfac;

TEST_CASE("vertex labels") {
  CHECK(to_string(VertexId{0, 0}) == "x_1_1");
  CHECK(parse_label("x_12_3") == VertexId{11, 2});
  for (const char* bad : {"x_1", "y_1_1", "x__1", "x_1_", "x_0_1", "x_1_01", "x_a_1", "x_1_1_1"})
    CHECK_THROWS_AS(parse_label(bad), ParseError);
}

TEST_CASE("round trip is exact") {
  for (const auto& p : {Params(1, 2, 2, {3}), Params(1, 3, 2, {3, 6}), Params(2, 3, 3, {12, 12, 12})}) {
    const Design d = construct(p);
    const std::string text = serialize(d);
    const Design back = parse_design(text);
    CHECK(same_design(d, back));
    CHECK(serialize(back) == text);
  }
  // Amalgamated designs (g > 1, {u^2, v} edges) survive too.
  const Design base = build_base(Params(1, 3, 2, {3, 6}));
  CHECK(same_design(base, parse_design(serialize(base))));
  CHECK(verify_c1_c4(parse_design(serialize(base))).passed());
}

TEST_CASE("serialized layout") {
  const std::string text = serialize(construct(Params(1, 2, 2, {3})));
  CHECK(text.find("\"formatVersion\": 1") != std::string::npos);
  CHECK(text.find("\"params\": {\"lambda\": 1, \"m\": 2, \"n\": 2, \"r\": [3]}") != std::string::npos);
  CHECK(text.find("[\"x_1_1\", \"x_1_2\", \"x_2_1\"]") != std::string::npos);
  CHECK(text.find("{\"color\": 1, \"r\": 3, \"edges\": [") != std::string::npos);
}

TEST_CASE("parse errors") {
  const std::string good = serialize(construct(Params(1, 2, 2, {3})));
  auto with = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, from.size(), to);
  };
  CHECK_THROWS_AS(parse_design("not json"), ParseError);
  CHECK_THROWS_AS(parse_design("{}"), ParseError);
  CHECK_THROWS_AS(parse_design(with("\"formatVersion\": 1", "\"formatVersion\": 2")), ParseError);
  CHECK_THROWS_AS(parse_design(with("\"n\": 2", "\"n\": 1")), ParseError);
  CHECK_THROWS_AS(parse_design(with("\"r\": 3", "\"r\": 4")), ParseError);
  CHECK_THROWS_AS(parse_design(with("\"color\": 1", "\"color\": 2")), ParseError);
  CHECK_THROWS_AS(parse_design(with("[\"x_1_1\", \"x_1_2\", \"x_2_1\"]", "[\"x_1_1\", \"x_1_2\"]")),
                  ParseError);
  CHECK_THROWS_AS(parse_design(with("[\"x_1_1\", \"x_1_2\", \"x_2_1\"]", "[\"x_1_1\", \"x_1_2\", \"x_1_1\"]")),
                  ParseError);
  CHECK_THROWS_AS(parse_design(with("[\"x_1_1\", \"x_1_2\", \"x_2_1\"]", "[\"x_1_1\", \"x_1_2\", \"x_2_9\"]")),
                  ParseError);
  CHECK_THROWS_AS(parse_design(with("{\"label\": \"x_1_2\", \"g\": 1}", "{\"label\": \"x_1_1\", \"g\": 1}")),
                  ParseError);
  CHECK_THROWS_AS(parse_design(with("\"g\": 1", "\"g\": \"one\"")), ParseError);
}

TEST_CASE("part names") {
  CHECK(part_name(0) == "A");
  CHECK(part_name(25) == "Z");
  CHECK(part_name(26) == "AA");
  CHECK(part_name(27) == "AB");
}

TEST_CASE("schedule") {
  SUBCASE("m = 3, n = 2, r = 1: nine days of two meetings") {
    const Design d = construct(uniform_params(1, 3, 2, 1));
    std::istringstream in(schedule(d));
    std::map<int, int> meetings;
    std::map<std::pair<int, std::string>, int> load;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      int day = 0;
      REQUIRE(std::sscanf(line.c_str(), "Day %d:", &day) == 1);
      ++meetings[day];
      const auto open = line.find('{');
      std::istringstream people(line.substr(open + 1, line.size() - open - 2));
      std::string who;
      while (std::getline(people, who, ',')) {
        if (who.front() == ' ') who.erase(0, 1);
        ++load[{day, who}];
      }
    }
    CHECK(meetings.size() == 9);
    for (const auto& [day, count] : meetings) CHECK(count == 2);
    CHECK(load.size() == 9 * 6);
    for (const auto& [key, count] : load) CHECK(count == 1);
  }
  SUBCASE("m = 2, n = 2, r = 3: one day, four meetings") {
    const std::string s = schedule(construct(Params(1, 2, 2, {3})));
    CHECK(s ==
          "Day 1: {A1, A2, B1}\n"
          "Day 1: {A1, A2, B2}\n"
          "Day 1: {A1, B1, B2}\n"
          "Day 1: {A2, B1, B2}\n");
  }
  SUBCASE("unsupported inputs") {
    CHECK_THROWS_AS(schedule(construct(Params(1, 3, 2, {3, 6}))), DomainError);
    Design empty(Params(1, 2, 2, {3}));
    CHECK_THROWS_AS(schedule(empty), DomainError);
  }
}
