#pragma once

// Shared helpers for the test suites: compact builders and the brute-force
// oracles the properties are checked against.

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "tfc/tfc.hpp"

namespace tfc::test {

inline LevelSchedule sched(std::initializer_list<const char*> table,
                           std::initializer_list<const char*> tail) {
  LevelSchedule s;
  for (const char* c : table) s.table.push_back(parse_rule(c));
  for (const char* c : tail) s.tail.push_back(parse_rule(c));
  return s;
}

inline TCondition cond(const char* stem,
                       std::initializer_list<const char*> table,
                       std::initializer_list<const char*> tail) {
  return TCondition{Word3::parse(stem), sched(table, tail)};
}

/// Full-splitting condition above the given stem.
inline TCondition full_split(const char* stem) {
  return cond(stem, {}, {"S"});
}

inline EventualReal real(const char* prefix, const char* tail) {
  return EventualReal{Word3::parse(prefix), Word3::parse(tail)};
}

inline bool semantically_equal(const TCondition& a, const TCondition& b) {
  return leq(a, b) && leq(b, a);
}

/// Depth covering both table horizons plus two lcm periods, the exact
/// decision window for the ordering; capped for enumeration sanity.
inline std::size_t oracle_depth(const TCondition& a, const TCondition& b,
                                std::size_t cap = 18) {
  std::size_t horizon = std::max(a.stem.size() + a.schedule.table.size(),
                                 b.stem.size() + b.schedule.table.size());
  std::size_t period = std::lcm(a.schedule.period(), b.schedule.period());
  return std::min(horizon + 2 * period, cap);
}

/// Brute-force node-set inclusion up to the given depth.
inline bool node_sets_included(const TCondition& q, const TCondition& p,
                               std::size_t depth) {
  for (std::size_t d = 0; d <= depth; ++d) {
    auto nq = nodes_at_depth(q, d, depth);
    auto np = nodes_at_depth(p, d, depth);
    std::set<std::string> inp;
    for (const auto& w : np) inp.insert(w.str());
    for (const auto& w : nq)
      if (!inp.count(w.str())) return false;
  }
  return true;
}

/// Words of the given length lying in both trees.
inline std::vector<Word3> common_nodes(const TCondition& a, const TCondition& b,
                                       std::size_t depth) {
  auto na = nodes_at_depth(a, depth, depth);
  auto nb = nodes_at_depth(b, depth, depth);
  std::set<std::string> in_b;
  for (const auto& w : nb) in_b.insert(w.str());
  std::vector<Word3> out;
  for (const auto& w : na)
    if (in_b.count(w.str())) out.push_back(w);
  return out;
}

}  // namespace tfc::test
