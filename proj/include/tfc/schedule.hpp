#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tfc/error.hpp"

namespace tfc {

/// Behavior of one tree level above the stem: either every node splits
/// fully into all three digits, or every node takes the one fixed digit.
struct LevelRule {
  enum class Kind : std::uint8_t { split, fixed };

  Kind kind = Kind::split;
  int digit = 0;  // meaningful when kind == fixed

  static constexpr LevelRule Split() { return {Kind::split, 0}; }
  static LevelRule Fixed(int d) {
    if (d < 0 || d > 2) throw ForcingError("fixed digit must be 0, 1 or 2");
    return {Kind::fixed, d};
  }

  bool is_split() const { return kind == Kind::split; }
  bool is_fixed() const { return kind == Kind::fixed; }
  bool is_fixed(int d) const { return kind == Kind::fixed && digit == d; }

  friend bool operator==(const LevelRule&, const LevelRule&) = default;
};

/// Wire codes: "S", "F0", "F1", "F2".
inline std::string rule_code(const LevelRule& r) {
  if (r.is_split()) return "S";
  return "F" + std::to_string(r.digit);
}

inline LevelRule parse_rule(std::string_view code) {
  if (code == "S") return LevelRule::Split();
  if (code.size() == 2 && code[0] == 'F' && code[1] >= '0' && code[1] <= '2')
    return LevelRule::Fixed(code[1] - '0');
  throw ForcingError("unknown level-rule code '" + std::string(code) + "'");
}

/// Level rules from some base level on: a finite table, then the tail
/// repeated forever. Tail periods are kept as given; equality of the
/// represented trees is decided semantically, not by representation.
// TODO: minimal-period reduction of the tail would shrink the lcm horizons
// used by the ordering tests.
struct LevelSchedule {
  std::vector<LevelRule> table;
  std::vector<LevelRule> tail;

  /// Rule at offset levels above the base.
  const LevelRule& rule(std::size_t offset) const {
    if (offset < table.size()) return table[offset];
    if (tail.empty()) throw ForcingError("schedule has an empty tail");
    return tail[(offset - table.size()) % tail.size()];
  }

  /// Same schedule with the first k rules dropped.
  LevelSchedule suffix(std::size_t k) const {
    LevelSchedule s;
    if (k <= table.size()) {
      s.table.assign(table.begin() + static_cast<std::ptrdiff_t>(k),
                     table.end());
      s.tail = tail;
      return s;
    }
    if (tail.empty()) throw ForcingError("schedule has an empty tail");
    std::size_t r = (k - table.size()) % tail.size();
    s.tail.reserve(tail.size());
    for (std::size_t i = 0; i < tail.size(); ++i)
      s.tail.push_back(tail[(r + i) % tail.size()]);
    return s;
  }

  /// Same schedule with the rule at one offset replaced; tail cells are
  /// unrolled into the table as far as needed, so the periodic part keeps
  /// its rules (only its phase shifts).
  LevelSchedule with_rule(std::size_t offset, const LevelRule& r) const {
    LevelSchedule s;
    s.table = table;
    s.tail = tail;
    if (offset >= s.table.size()) {
      if (tail.empty()) throw ForcingError("schedule has an empty tail");
      std::size_t extra = offset + 1 - s.table.size();
      for (std::size_t i = 0; i < extra; ++i)
        s.table.push_back(tail[i % tail.size()]);
      std::size_t shift = extra % tail.size();
      std::vector<LevelRule> rotated;
      rotated.reserve(tail.size());
      for (std::size_t i = 0; i < tail.size(); ++i)
        rotated.push_back(tail[(shift + i) % tail.size()]);
      s.tail = std::move(rotated);
    }
    s.table[offset] = r;
    return s;
  }

  bool tail_has_split() const {
    for (const auto& r : tail)
      if (r.is_split()) return true;
    return false;
  }

  bool has_fixed2() const {
    for (const auto& r : table)
      if (r.is_fixed(2)) return true;
    for (const auto& r : tail)
      if (r.is_fixed(2)) return true;
    return false;
  }

  std::size_t period() const { return tail.size(); }

  friend bool operator==(const LevelSchedule&, const LevelSchedule&) = default;
};

}  // namespace tfc
