#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "tfc/coding.hpp"
#include "tfc/condition.hpp"
#include "tfc/error.hpp"
#include "tfc/hechler.hpp"
#include "tfc/real.hpp"
#include "tfc/schedule.hpp"
#include "tfc/word.hpp"

// Wire formats, kept bit-exact for fixtures:
//   condition   {"stem":"021","schedule":{"table":["S","F0","F1"],"tail":["S","F0"]}}
//   real        {"prefix":"012","tail":"2"}
//   selector    {"choices":"01","tail":"2"}
//   predicate   {"table":"10","tail":"0"}
//   parity      {"transient":"01","period":"0"}
//   binary word {"word2":"0110"}
//   sequence    {"incr":[0,2,5]}
//   d-condition {"stem":[2,5],"floor":{"table":[3,3,4],"tail":4}}

namespace tfc {

namespace detail {
inline std::string expect_string(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw ForcingError(std::string("expected string field '") + key + "'");
  return j.at(key).get<std::string>();
}
}  // namespace detail

inline void to_json(nlohmann::json& j, const LevelRule& r) { j = rule_code(r); }
inline void from_json(const nlohmann::json& j, LevelRule& r) {
  if (!j.is_string()) throw ForcingError("level rule must be a string code");
  r = parse_rule(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const LevelSchedule& s) {
  j = nlohmann::json{{"table", s.table}, {"tail", s.tail}};
}
inline void from_json(const nlohmann::json& j, LevelSchedule& s) {
  s.table = j.at("table").get<std::vector<LevelRule>>();
  s.tail = j.at("tail").get<std::vector<LevelRule>>();
}

inline void to_json(nlohmann::json& j, const TCondition& p) {
  j = nlohmann::json{{"stem", p.stem.str()}, {"schedule", p.schedule}};
}
inline void from_json(const nlohmann::json& j, TCondition& p) {
  p.stem = Word3::parse(detail::expect_string(j, "stem"));
  p.schedule = j.at("schedule").get<LevelSchedule>();
}

inline void to_json(nlohmann::json& j, const EventualReal& z) {
  j = nlohmann::json{{"prefix", z.prefix.str()}, {"tail", z.tail.str()}};
}
inline void from_json(const nlohmann::json& j, EventualReal& z) {
  z.prefix = Word3::parse(detail::expect_string(j, "prefix"));
  z.tail = Word3::parse(detail::expect_string(j, "tail"));
  if (z.tail.empty()) throw ForcingError("real tail must be nonempty");
}

inline void to_json(nlohmann::json& j, const BranchSelector& s) {
  j = nlohmann::json{{"choices", s.choices.str()}, {"tail", s.tail_choices.str()}};
}
inline void from_json(const nlohmann::json& j, BranchSelector& s) {
  s.choices = Word3::parse(detail::expect_string(j, "choices"));
  s.tail_choices = Word3::parse(detail::expect_string(j, "tail"));
  if (s.tail_choices.empty())
    throw ForcingError("selector tail must be nonempty");
}

inline void to_json(nlohmann::json& j, const OddLevelPredicate& a) {
  j = nlohmann::json{{"table", a.table.str()}, {"tail", a.tail.str()}};
}
inline void from_json(const nlohmann::json& j, OddLevelPredicate& a) {
  a.table = Word2::parse(detail::expect_string(j, "table"));
  a.tail = Word2::parse(detail::expect_string(j, "tail"));
  if (a.tail.empty()) throw ForcingError("predicate tail must be nonempty");
}

inline void to_json(nlohmann::json& j, const ParityAnalysis& a) {
  j = nlohmann::json{{"transient", a.transient.str()}, {"period", a.period.str()}};
}
inline void from_json(const nlohmann::json& j, ParityAnalysis& a) {
  a.transient = Word2::parse(detail::expect_string(j, "transient"));
  a.period = Word2::parse(detail::expect_string(j, "period"));
  if (a.period.empty()) throw ForcingError("parity period must be nonempty");
}

inline void to_json(nlohmann::json& j, const EventualFn& f) {
  j = nlohmann::json{{"table", f.table}, {"tail", f.tail_value}};
}
inline void from_json(const nlohmann::json& j, EventualFn& f) {
  f.table = j.at("table").get<std::vector<long>>();
  f.tail_value = j.at("tail").get<long>();
}

inline void to_json(nlohmann::json& j, const DCondition& p) {
  j = nlohmann::json{{"stem", p.stem}, {"floor", p.floor}};
}
inline void from_json(const nlohmann::json& j, DCondition& p) {
  p.stem = j.at("stem").get<NatWord>();
  p.floor = j.at("floor").get<EventualFn>();
}

inline void to_json(nlohmann::json& j, const EventualNatSeq& x) {
  j = nlohmann::json{{"prefix", x.prefix}, {"tail", x.tail}};
}
inline void from_json(const nlohmann::json& j, EventualNatSeq& x) {
  x.prefix = j.at("prefix").get<NatWord>();
  x.tail = j.at("tail").get<NatWord>();
  if (x.tail.empty()) throw ForcingError("sequence tail must be nonempty");
}

// Standalone wrappers (explicit names, since plain words travel as strings
// inside the composite formats above).

inline nlohmann::json word2_json(const Word2& w) {
  return nlohmann::json{{"word2", w.str()}};
}
inline Word2 word2_from_json(const nlohmann::json& j) {
  return Word2::parse(detail::expect_string(j, "word2"));
}

inline nlohmann::json incr_json(const std::vector<std::uint64_t>& s) {
  return nlohmann::json{{"incr", s}};
}
inline std::vector<std::uint64_t> incr_from_json(const nlohmann::json& j) {
  if (!j.contains("incr") || !j.at("incr").is_array())
    throw ForcingError("expected array field 'incr'");
  return j.at("incr").get<std::vector<std::uint64_t>>();
}

}  // namespace tfc
