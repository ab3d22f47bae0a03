#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tfc/error.hpp"
#include "tfc/real.hpp"
#include "tfc/schedule.hpp"
#include "tfc/word.hpp"

namespace tfc {

/// A tree condition: perfect tree on 3^{<omega} that, at every level above
/// the stem, either splits fully everywhere or takes one uniform digit
/// everywhere. The schedule lists the per-level rules from level
/// |stem| on. Canonical form requires the rule at level |stem| to be Split
/// (otherwise the stem would extend); `normalize` establishes it.
///
/// Conditions are immutable values; all operations are pure functions.
struct TCondition {
  Word3 stem;
  LevelSchedule schedule;

  /// Rule governing level L; requires L >= |stem|.
  const LevelRule& rule_at(std::size_t level) const {
    if (level < stem.size())
      throw ForcingError("rule_at below the stem");
    return schedule.rule(level - stem.size());
  }

  friend bool operator==(const TCondition&, const TCondition&) = default;
};

/// Default enumeration guard for the brute-force node oracle.
inline constexpr std::size_t kDefaultDepthLimit = 20;

/// Amalgamation drivers refuse to enumerate more than 3^k nodes past this.
inline constexpr std::size_t kMaxFanoutExponent = 9;

// ---------------------------------------------------------------------------
// validation

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> issues;
};

/// Checks the representation against the condition class. With strict set,
/// digit 2 may not be forced at any non-splitting level above the stem;
/// without it, Fixed(2) rules are admitted (the class the amalgamation
/// drivers may land in).
inline ValidationReport validate(const TCondition& p, bool strict) {
  ValidationReport rep;
  auto flag = [&rep](const std::string& msg) {
    rep.valid = false;
    rep.issues.push_back(msg);
  };
  if (p.schedule.tail.empty()) {
    flag("schedule tail is empty");
    return rep;
  }
  if (!p.schedule.tail_has_split())
    flag("schedule tail has no splitting level, so the tree is not perfect");
  const LevelRule& first =
      p.schedule.table.empty() ? p.schedule.tail.front() : p.schedule.table.front();
  if (!first.is_split())
    flag("rule at the stem level is not Split, so the stored stem is not maximal");
  if (strict && p.schedule.has_fixed2())
    flag("digit 2 is forced at a non-splitting level above the stem");
  return rep;
}

inline bool is_strict(const TCondition& p) { return !p.schedule.has_fixed2(); }

// ---------------------------------------------------------------------------
// canonical form

/// Absorbs leading Fixed rules into the stem until the first rule is Split.
/// The represented tree is unchanged. Requires a splitting tail.
inline TCondition normalize(Word3 stem, LevelSchedule schedule) {
  if (!schedule.tail_has_split())
    throw ForcingError("cannot normalize: schedule tail has no splitting level");
  std::size_t guard = schedule.table.size() + schedule.tail.size() + 1;
  while (guard-- > 0) {
    const LevelRule& r = schedule.rule(0);
    if (r.is_split()) return TCondition{std::move(stem), std::move(schedule)};
    stem.push_back(r.digit);
    schedule = schedule.suffix(1);
  }
  throw ForcingError("normalize failed to reach a splitting level");
}

// ---------------------------------------------------------------------------
// membership, restriction, ordering

/// t is a node of p.
inline bool member(const TCondition& p, const Word3& t) {
  std::size_t overlap = std::min(t.size(), p.stem.size());
  for (std::size_t i = 0; i < overlap; ++i)
    if (t[i] != p.stem[i]) return false;
  for (std::size_t i = p.stem.size(); i < t.size(); ++i) {
    const LevelRule& r = p.rule_at(i);
    if (r.is_fixed() && t[i] != r.digit) return false;
  }
  return true;
}

/// p restricted to the nodes compatible with t, in canonical form.
inline TCondition restrict_to(const TCondition& p, const Word3& t) {
  if (!member(p, t))
    throw ForcingError("restriction target is not a node of the condition");
  if (t.size() <= p.stem.size()) return p;
  return normalize(t, p.schedule.suffix(t.size() - p.stem.size()));
}

namespace detail {
inline std::size_t lcm_periods(const TCondition& a, const TCondition& b) {
  if (a.schedule.tail.empty() || b.schedule.tail.empty())
    throw ForcingError("condition has an empty schedule tail");
  return std::lcm(a.schedule.period(), b.schedule.period());
}

inline std::size_t table_horizon(const TCondition& p) {
  return p.stem.size() + p.schedule.table.size();
}
}  // namespace detail

/// q <= p, i.e. the tree of q is included in the tree of p. The level-wise
/// comparison is decided exactly over one lcm of the tail periods beyond
/// both table horizons.
inline bool leq(const TCondition& q, const TCondition& p) {
  if (q.stem.size() < p.stem.size()) return false;
  if (!member(p, q.stem)) return false;
  std::size_t horizon =
      std::max(detail::table_horizon(q), detail::table_horizon(p));
  std::size_t end = horizon + detail::lcm_periods(q, p);
  for (std::size_t level = q.stem.size(); level < end; ++level) {
    const LevelRule& rq = q.rule_at(level);
    const LevelRule& rp = p.rule_at(level);
    if (rq.is_split() && !rp.is_split()) return false;
    if (rq.is_fixed() && rp.is_fixed() && rp.digit != rq.digit) return false;
  }
  return true;
}

/// First m splitting levels of p, in increasing order.
inline std::vector<std::size_t> splitting_levels(const TCondition& p,
                                                 std::size_t m) {
  std::vector<std::size_t> out;
  if (m == 0) return out;
  if (!p.schedule.tail_has_split())
    throw ForcingError("schedule tail has no splitting level");
  std::size_t level = p.stem.size();
  while (out.size() < m) {
    if (p.rule_at(level).is_split()) out.push_back(level);
    ++level;
  }
  return out;
}

/// First splitting level >= from (and >= |stem|).
inline std::size_t first_split_at_or_after(const TCondition& p,
                                           std::size_t from) {
  if (!p.schedule.tail_has_split())
    throw ForcingError("schedule tail has no splitting level");
  std::size_t level = std::max(from, p.stem.size());
  while (!p.rule_at(level).is_split()) ++level;
  return level;
}

/// q <= p and the first n+1 splitting levels of q and p coincide.
inline bool leq_n(const TCondition& q, const TCondition& p, std::size_t n) {
  if (!leq(q, p)) return false;
  return splitting_levels(q, n + 1) == splitting_levels(p, n + 1);
}

// ---------------------------------------------------------------------------
// meets

struct Incompatible {
  enum class Reason { stem_conflict, fixed_conflict, no_splitting_tail };
  Reason reason;
  /// First conflicting level, set for the two conflict reasons.
  std::optional<std::size_t> level;
};

using MeetResult = std::variant<TCondition, Incompatible>;

inline bool is_incompatible(const MeetResult& m) {
  return std::holds_alternative<Incompatible>(m);
}

/// Greatest common extension of p and q when one exists: the node-set
/// intersection, which is again a condition unless the stems clash, two
/// Fixed rules clash, or the merged schedule stops splitting.
inline MeetResult meet(const TCondition& p, const TCondition& q) {
  const TCondition& lo = p.stem.size() >= q.stem.size() ? p : q;  // longer stem
  const TCondition& hi = p.stem.size() >= q.stem.size() ? q : p;
  for (std::size_t i = 0; i < hi.stem.size(); ++i)
    if (lo.stem[i] != hi.stem[i])
      return Incompatible{Incompatible::Reason::stem_conflict, i};
  for (std::size_t i = hi.stem.size(); i < lo.stem.size(); ++i) {
    const LevelRule& r = hi.rule_at(i);
    if (r.is_fixed() && lo.stem[i] != r.digit)
      return Incompatible{Incompatible::Reason::fixed_conflict, i};
  }

  std::size_t base = lo.stem.size();
  std::size_t horizon =
      std::max({base, detail::table_horizon(lo), detail::table_horizon(hi)});
  std::size_t period = detail::lcm_periods(lo, hi);

  auto combine = [](const LevelRule& a,
                    const LevelRule& b) -> std::optional<LevelRule> {
    if (a.is_split() && b.is_split()) return LevelRule::Split();
    if (a.is_split()) return b;
    if (b.is_split()) return a;
    if (a.digit == b.digit) return a;
    return std::nullopt;
  };

  LevelSchedule merged;
  for (std::size_t level = base; level < horizon + period; ++level) {
    auto r = combine(lo.rule_at(level), hi.rule_at(level));
    if (!r)
      return Incompatible{Incompatible::Reason::fixed_conflict, level};
    if (level < horizon)
      merged.table.push_back(*r);
    else
      merged.tail.push_back(*r);
  }
  bool tail_splits = false;
  for (const auto& r : merged.tail) tail_splits |= r.is_split();
  if (!tail_splits)
    return Incompatible{Incompatible::Reason::no_splitting_tail, std::nullopt};
  return normalize(lo.stem, std::move(merged));
}

// ---------------------------------------------------------------------------
// the odd-level antichain family

/// Periodic predicate on the odd levels 1, 3, 5, ...; bit j answers for
/// odd level 2j+1.
struct OddLevelPredicate {
  Word2 table;
  Word2 tail;

  bool contains(std::size_t j) const {
    if (j < table.size()) return table[j] == 1;
    if (tail.empty()) throw ForcingError("odd-level predicate has an empty tail");
    return tail[(j - table.size()) % tail.size()] == 1;
  }
};

/// The condition with empty stem that splits at every even level and at
/// odd level n takes digit 1 when n is in the predicate, 0 otherwise.
/// Distinct predicates give incompatible conditions.
inline TCondition antichain_condition(const OddLevelPredicate& a) {
  if (a.tail.empty())
    throw ForcingError("odd-level predicate has an empty tail");
  LevelSchedule s;
  for (std::size_t j = 0; j < a.table.size(); ++j) {
    s.table.push_back(LevelRule::Split());
    s.table.push_back(LevelRule::Fixed(a.table[j]));
  }
  for (std::size_t j = 0; j < a.tail.size(); ++j) {
    s.tail.push_back(LevelRule::Split());
    s.tail.push_back(LevelRule::Fixed(a.tail[j]));
  }
  return TCondition{Word3{}, std::move(s)};
}

// ---------------------------------------------------------------------------
// branches

/// The unique branch through p that follows the selector at splitting
/// levels. The result is eventually periodic with period dividing
/// |schedule tail| * |selector tail|; every finite prefix is a node of p.
inline EventualReal branch(const TCondition& p, const BranchSelector& sel) {
  if (sel.tail_choices.empty())
    throw ForcingError("branch selector has an empty tail");
  if (!p.schedule.tail_has_split())
    throw ForcingError("schedule tail has no splitting level");

  Word3 digits = p.stem;
  std::size_t splits_seen = 0;
  std::size_t table_end = detail::table_horizon(p);
  std::size_t period = p.schedule.period();

  auto step = [&](std::size_t level) {
    const LevelRule& r = p.rule_at(level);
    if (r.is_split())
      digits.push_back(sel.choice(splits_seen++));
    else
      digits.push_back(r.digit);
  };

  // find the first tail-aligned level with all finite choices consumed
  std::size_t level = p.stem.size();
  auto aligned = [&](std::size_t l) {
    return l >= table_end && (l - table_end) % period == 0 &&
           splits_seen >= sel.choices.size();
  };
  while (!aligned(level)) step(level++);
  std::size_t cycle_start = level;

  std::size_t splits_per_period = 0;
  for (const auto& r : p.schedule.tail) splits_per_period += r.is_split();
  std::size_t m = sel.tail_choices.size();
  std::size_t periods = m / std::gcd(splits_per_period, m);
  std::size_t cycle_len = period * periods;
  for (std::size_t i = 0; i < cycle_len; ++i) step(level++);

  EventualReal z;
  z.prefix = digits.prefix(cycle_start);
  z.tail = Word3::parse(digits.str().substr(cycle_start));
  return z;
}

// ---------------------------------------------------------------------------
// brute-force node enumeration

/// Exactly the nodes of p of length d, in lexicographic order. Guarded by
/// the depth limit because the count grows as 3^(splits below d).
inline std::vector<Word3> nodes_at_depth(const TCondition& p, std::size_t d,
                                         std::size_t limit = kDefaultDepthLimit) {
  if (d > limit)
    throw ForcingError("node enumeration depth " + std::to_string(d) +
                       " exceeds the limit " + std::to_string(limit));
  if (d <= p.stem.size()) return {p.stem.prefix(d)};
  std::vector<Word3> acc{p.stem};
  for (std::size_t level = p.stem.size(); level < d; ++level) {
    const LevelRule& r = p.rule_at(level);
    std::vector<Word3> next;
    next.reserve(acc.size() * (r.is_split() ? 3 : 1));
    for (const Word3& w : acc) {
      if (r.is_split()) {
        for (int digit = 0; digit < 3; ++digit) {
          Word3 e = w;
          e.push_back(digit);
          next.push_back(std::move(e));
        }
      } else {
        Word3 e = w;
        e.push_back(r.digit);
        next.push_back(std::move(e));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace tfc
