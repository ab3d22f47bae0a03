#include "catch_amalgamated.hpp"

#include "support.hpp"
#include "tfc/json_io.hpp"
#include "tfc/tfc.hpp"

using namespace tfc;
using namespace tfc::test;
using nlohmann::json;

TEST_CASE("condition wire format is bit-exact") {
  TCondition p = cond("021", {"S", "F0", "F1"}, {"S", "F0"});
  json j = p;
  REQUIRE(j.dump() ==
          R"({"schedule":{"table":["S","F0","F1"],"tail":["S","F0"]},"stem":"021"})");
  // field order in the input does not matter
  auto parsed = json::parse(
      R"({"stem":"021","schedule":{"table":["S","F0","F1"],"tail":["S","F0"]}})")
                    .get<TCondition>();
  REQUIRE(parsed == p);
}

TEST_CASE("real, selector and predicate formats") {
  EventualReal z = real("012", "2");
  REQUIRE(json(z).dump() == R"({"prefix":"012","tail":"2"})");
  REQUIRE(json::parse(R"({"prefix":"012","tail":"2"})").get<EventualReal>() == z);

  BranchSelector sel{Word3::parse("01"), Word3::parse("2")};
  json js = sel;
  REQUIRE(js.dump() == R"({"choices":"01","tail":"2"})");

  auto a = json::parse(R"({"table":"10","tail":"0"})").get<OddLevelPredicate>();
  REQUIRE(a.contains(0));
  REQUIRE_FALSE(a.contains(1));
  REQUIRE_FALSE(a.contains(5));
}

TEST_CASE("parity analysis and word wrappers") {
  ParityAnalysis pa{Word2::parse("01"), Word2::parse("0")};
  REQUIRE(json(pa).dump() == R"({"period":"0","transient":"01"})");

  REQUIRE(word2_json(Word2::parse("0110")).dump() == R"({"word2":"0110"})");
  REQUIRE(word2_from_json(json::parse(R"({"word2":"0110"})")).str() == "0110");

  REQUIRE(incr_json({0, 2, 5}).dump() == R"({"incr":[0,2,5]})");
  REQUIRE(incr_from_json(json::parse(R"({"incr":[0,2,5]})")) ==
          std::vector<std::uint64_t>({0, 2, 5}));
}

TEST_CASE("dominating-condition format") {
  DCondition p;
  p.stem = {2, 5};
  p.floor.table = {3, 3, 4};
  p.floor.tail_value = 4;
  json j = p;
  REQUIRE(j.dump() == R"({"floor":{"table":[3,3,4],"tail":4},"stem":[2,5]})");
  REQUIRE(json::parse(R"({"stem":[2,5],"floor":{"table":[3,3,4],"tail":4}})")
              .get<DCondition>() == p);
}

TEST_CASE("malformed payloads are rejected") {
  REQUIRE_THROWS_AS(
      json::parse(R"({"stem":"03","schedule":{"table":[],"tail":["S"]}})")
          .get<TCondition>(),
      ForcingError);
  REQUIRE_THROWS_AS(
      json::parse(R"({"stem":"0","schedule":{"table":["X"],"tail":["S"]}})")
          .get<TCondition>(),
      ForcingError);
  REQUIRE_THROWS_AS(json::parse(R"({"prefix":"0","tail":""})").get<EventualReal>(),
                    ForcingError);
}

TEST_CASE("emitted values re-parse to semantically equal ones") {
  Rng rng(2718);
  for (int i = 0; i < 60; ++i) {
    TCondition p = gen_condition(rng, i % 2 == 0);
    auto back = json::parse(json(p).dump()).get<TCondition>();
    REQUIRE(back == p);
    REQUIRE(semantically_equal(back, p));

    EventualReal z = gen_real_in_H(rng);
    auto zback = json::parse(json(z).dump()).get<EventualReal>();
    for (std::size_t d = 0; d < 30; ++d) REQUIRE(zback.digit(d) == z.digit(d));
  }
}
