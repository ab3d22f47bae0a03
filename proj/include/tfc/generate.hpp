#pragma once

#include <cstdint>
#include <random>

#include "tfc/condition.hpp"
#include "tfc/hechler.hpp"
#include "tfc/real.hpp"
#include "tfc/word.hpp"

namespace tfc {

/// Seeded source of small uniform draws. Built on mt19937_64 with plain
/// modulo reduction so identical seeds give identical streams on every
/// platform (std distributions do not guarantee that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform-ish draw from [0, n).
  int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

  /// Uniform-ish draw from [lo, hi].
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

inline Word3 gen_word3(Rng& rng, int max_len) {
  Word3 w;
  int len = rng.range(0, max_len);
  for (int i = 0; i < len; ++i) w.push_back(rng.below(3));
  return w;
}

inline Word2 gen_word2(Rng& rng, int max_len) {
  Word2 w;
  int len = rng.range(0, max_len);
  for (int i = 0; i < len; ++i) w.push_back(rng.below(2));
  return w;
}

inline LevelRule gen_rule(Rng& rng, bool strict, int split_weight) {
  if (rng.chance(split_weight, 10)) return LevelRule::Split();
  return LevelRule::Fixed(rng.below(strict ? 2 : 3));
}

/// A random valid condition in canonical form; strict keeps the fixed
/// digits in {0,1}. split_weight tunes the split density in tenths.
inline TCondition gen_condition(Rng& rng, bool strict, int max_stem = 4,
                                int max_table = 4, int max_tail = 3,
                                int split_weight = 5) {
  TCondition p;
  p.stem = gen_word3(rng, max_stem);
  int table_len = rng.range(0, max_table);
  for (int i = 0; i < table_len; ++i)
    p.schedule.table.push_back(gen_rule(rng, strict, split_weight));
  int tail_len = rng.range(1, max_tail);
  for (int i = 0; i < tail_len; ++i)
    p.schedule.tail.push_back(gen_rule(rng, strict, split_weight));
  p.schedule.tail[static_cast<std::size_t>(rng.below(tail_len))] = LevelRule::Split();
  if (!p.schedule.table.empty()) p.schedule.table[0] = LevelRule::Split();
  return normalize(p.stem, p.schedule);
}

/// A random condition whose split density stays low enough for the
/// brute-force node oracles (at most one split per tail period).
inline TCondition gen_condition_sparse(Rng& rng, bool strict) {
  TCondition p;
  p.stem = gen_word3(rng, 3);
  int table_len = rng.range(0, 3);
  for (int i = 0; i < table_len; ++i)
    p.schedule.table.push_back(gen_rule(rng, strict, 3));
  int tail_len = rng.range(2, 3);
  for (int i = 0; i < tail_len; ++i)
    p.schedule.tail.push_back(LevelRule::Fixed(rng.below(strict ? 2 : 3)));
  p.schedule.tail[static_cast<std::size_t>(rng.below(tail_len))] = LevelRule::Split();
  if (!p.schedule.table.empty()) p.schedule.table[0] = LevelRule::Split();
  return normalize(p.stem, p.schedule);
}

/// A random refinement of p: restrict to a random node a few splits down,
/// then demote a few splitting levels to fixed digits. Stays valid and
/// strict when p is.
inline TCondition gen_refinement(Rng& rng, const TCondition& p) {
  TCondition q = p;
  int walks = rng.range(0, 2);
  for (int i = 0; i < walks; ++i) {
    Word3 node = q.stem;
    node.push_back(rng.below(3));
    q = restrict_to(q, node);
  }
  int demotions = rng.range(0, 2);
  for (int i = 0; i < demotions; ++i) {
    auto splits = splitting_levels(q, 4);
    std::size_t level = splits[static_cast<std::size_t>(rng.range(1, 3))];
    q.schedule = q.schedule.with_rule(level - q.stem.size(),
                                      LevelRule::Fixed(rng.below(2)));
  }
  return q;
}

/// A random eventually periodic real with infinitely many 2s.
inline EventualReal gen_real_in_H(Rng& rng, int max_prefix = 6,
                                  int max_tail = 4) {
  EventualReal z;
  z.prefix = gen_word3(rng, max_prefix);
  int tail_len = rng.range(1, max_tail);
  for (int i = 0; i < tail_len; ++i) z.tail.push_back(rng.below(3));
  if (z.tail.count(2) == 0) {
    Word3 fixed;
    for (std::size_t i = 0; i + 1 < z.tail.size(); ++i)
      fixed.push_back(z.tail[i]);
    fixed.push_back(2);
    z.tail = fixed;
  }
  return z;
}

/// A random selector; with ensure_two the periodic part picks digit 2 at
/// least once, so branches of strict conditions land in H.
inline BranchSelector gen_selector(Rng& rng, bool ensure_two) {
  BranchSelector sel;
  sel.choices = gen_word3(rng, 4);
  int tail_len = rng.range(1, 3);
  for (int i = 0; i < tail_len; ++i) sel.tail_choices.push_back(rng.below(3));
  if (ensure_two && sel.tail_choices.count(2) == 0) {
    Word3 fixed;
    for (std::size_t i = 0; i + 1 < sel.tail_choices.size(); ++i)
      fixed.push_back(sel.tail_choices[i]);
    fixed.push_back(2);
    sel.tail_choices = fixed;
  }
  return sel;
}

inline OddLevelPredicate gen_odd_predicate(Rng& rng, int max_table = 3,
                                           int max_tail = 3) {
  OddLevelPredicate a;
  a.table = gen_word2(rng, max_table);
  int tail_len = rng.range(1, max_tail);
  for (int i = 0; i < tail_len; ++i) a.tail.push_back(rng.below(2));
  return a;
}

inline DCondition gen_dcondition(Rng& rng, int max_stem = 3, long max_value = 5) {
  DCondition p;
  int stem_len = rng.range(0, max_stem);
  for (int i = 0; i < stem_len; ++i)
    p.stem.push_back(rng.range(0, static_cast<int>(max_value)));
  int table_len = rng.range(0, 3);
  for (int i = 0; i < table_len; ++i)
    p.floor.table.push_back(rng.range(0, static_cast<int>(max_value)));
  p.floor.tail_value = rng.range(0, static_cast<int>(max_value));
  return p;
}

inline EventualNatSeq gen_nat_seq(Rng& rng, long max_value = 9) {
  EventualNatSeq x;
  int prefix_len = rng.range(0, 5);
  for (int i = 0; i < prefix_len; ++i)
    x.prefix.push_back(rng.range(0, static_cast<int>(max_value)));
  int tail_len = rng.range(1, 3);
  for (int i = 0; i < tail_len; ++i)
    x.tail.push_back(rng.range(0, static_cast<int>(max_value)));
  return x;
}

}  // namespace tfc
