#include <doctest.h>

#include <random>

#include "goodsets/errors.hpp"
#include "goodsets/io.hpp"
#include "goodsets/point_set.hpp"
#include "goodsets/rational.hpp"
#include "support.hpp"

using namespace goodsets;
namespace t = goodsets::testing;

TEST_CASE("parse point set documents") {
  const auto pair = parse_point_set(R"({"n":2,"points":[["a","x"],["b","x"]]})");
  CHECK(pair.size() == 2);
  CHECK(build_index(pair).size() == 3);

  const auto four = parse_point_set(R"({"n":3,"points":[["0","0","0"],["0","0","1"],["1","1","0"],["1","1","1"]]})");
  CHECK(four.size() == 4);
  CHECK(four == t::four_point_set());

  CHECK_THROWS_AS(parse_point_set(R"({"n":2,"points":[["a","x"],["a","x"]]})"), InputError);
}

TEST_CASE("malformed documents are input errors") {
  CHECK_THROWS_AS(parse_point_set("{"), InputError);
  CHECK_THROWS_AS(parse_point_set(R"({"points":[]})"), InputError);
  CHECK_THROWS_AS(parse_point_set(R"({"n":0,"points":[]})"), InputError);
  CHECK_THROWS_AS(parse_point_set(R"({"n":2,"points":[["a"]]})"), InputError);
  CHECK_THROWS_AS(parse_point_set(R"({"n":1,"points":[[3]]})"), InputError);
  CHECK_THROWS_AS(parse_point_set(R"({"n":1,"points":"a"})"), InputError);
  CHECK_NOTHROW(parse_point_set(R"({"n":2,"points":[]})"));
}

TEST_CASE("coordinate index") {
  const auto s = t::make_set(2, {{"a", "x"}, {"b", "x"}, {"b", "y"}});
  const auto index = build_index(s);
  CHECK(index.size() == 4);
  CHECK(index.projection(0) == std::vector<std::string>{"a", "b"});
  CHECK(index.projection(1) == std::vector<std::string>{"x", "y"});
  CHECK(index.column(1, "y").has_value());
  CHECK_FALSE(index.column(0, "y").has_value());
  for (std::size_t c = 0; c < index.size(); ++c) {
    CHECK(index.column(index.axis_of(c), index.label_of(c)) == c);
  }
  const auto row = index.incidence_row(2);
  CHECK(row.size() == 4);
  CHECK(row[*index.column(0, "b")] == 1);
  CHECK(row[*index.column(1, "y")] == 1);
  CHECK(row[*index.column(0, "a")] == 0);

  CHECK(build_index(t::four_point_set()).size() == 6);
  CHECK(build_index(t::make_set(3, {{"p", "q", "r"}})).size() == 3);
}

TEST_CASE("index is deterministic and grows by at most n") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto s = t::random_set(rng, n, 1 + rng() % 9, 3);
    const auto a = build_index(s);
    const auto b = build_index(s);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() == t::naive_coordinate_count(s, t::all_of(s)));
    for (std::size_t c = 0; c < a.size(); ++c) {
      CHECK(a.axis_of(c) == b.axis_of(c));
      CHECK(a.label_of(c) == b.label_of(c));
    }
    for (std::size_t k = 1; k <= s.size(); ++k) {
      Selection prefix(k - 1), longer(k);
      for (std::size_t i = 0; i < k; ++i) longer[i] = i;
      for (std::size_t i = 0; i + 1 < k; ++i) prefix[i] = i;
      const auto grow = coordinate_count(a, longer) - coordinate_count(a, prefix);
      CHECK(grow <= n);
    }
  }
}

TEST_CASE("serialize round trip on canonicalized documents") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = t::random_set(rng, 1 + rng() % 3, 1 + rng() % 8, 4).canonicalized();
    const auto text = serialize_point_set(s);
    const auto back = parse_point_set(text);
    CHECK(back == s);
    CHECK(serialize_point_set(back) == text);
  }
}

TEST_CASE("rationals") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2/1")) == "-2");
  CHECK(to_string(parse_rational("+0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("3/-6"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
}

TEST_CASE("function documents") {
  const auto s = t::rectangle();
  const auto f = parse_function(
      R"({"values":[{"point":["b","y"],"value":"4"},{"point":["a","x"],"value":1},
                    {"point":["a","y"],"value":"2"},{"point":["b","x"],"value":"-3/6"}]})",
      s);
  CHECK(f.values == t::q({"1", "2", "-1/2", "4"}));
  CHECK(function_from_json(function_to_json(s, f.values), s) == f);

  CHECK_THROWS_AS(parse_function(R"({"values":[{"point":["a","x"],"value":"1"}]})", s), InputError);
  CHECK_THROWS_AS(parse_function(R"({"values":[{"point":["c","x"],"value":"1"}]})", s), InputError);
}

TEST_CASE("bundle evaluation") {
  CoordFunctionBundle u;
  u.axes.resize(2);
  u.axes[0]["a"] = 1;
  u.axes[1]["x"] = Rational(1, 2);
  CHECK(u.evaluate(Point{{"a", "x"}}) == Rational(3, 2));
  CHECK(u.evaluate(Point{{"b", "x"}}) == Rational(1, 2));
}
