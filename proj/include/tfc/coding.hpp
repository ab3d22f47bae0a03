#pragma once

#include <cstddef>

#include "tfc/condition.hpp"
#include "tfc/error.hpp"
#include "tfc/real.hpp"
#include "tfc/word.hpp"

namespace tfc {

// ---------------------------------------------------------------------------
// block parity coding of ternary sequences
//
// A ternary sequence is cut into blocks by its occurrences of digit 2; the
// k-th coded bit is the parity of the 1s strictly between occurrence k and
// occurrence k+1 (0-indexed). On finite words this codes one bit per
// completed block.

/// Position of the (k+1)-th occurrence of digit 2 in z (0-indexed, so
/// two_position(z, 0) locates the first 2). Strictly increasing in k.
inline std::size_t two_position(const EventualReal& z, std::size_t k) {
  if (!z.in_H())
    throw ForcingError("real has only finitely many 2s (not in H)");
  std::size_t in_prefix = z.prefix.count(2);
  if (k < in_prefix) return z.prefix.find_occurrence(2, k);
  std::size_t per_period = z.tail.count(2);
  std::size_t rest = k - in_prefix;
  std::size_t whole = rest / per_period;
  std::size_t inside = rest % per_period;
  return z.prefix.size() + whole * z.tail.size() +
         z.tail.find_occurrence(2, inside);
}

/// Parity of the 1s between the (k+1)-th and (k+2)-th occurrence of 2 in z.
/// The half-open position range [two_position(k), two_position(k+1)) starts
/// at a 2, so this equals the strictly-between count.
inline int parity_digit(const EventualReal& z, std::size_t k) {
  std::size_t lo = two_position(z, k);
  std::size_t hi = two_position(z, k + 1);
  int ones = 0;
  for (std::size_t i = lo + 1; i < hi; ++i) ones ^= (z.digit(i) == 1);
  return ones;
}

/// The full bit stream (parity_digit(z, k))_k, represented exactly: it is
/// eventually periodic because z is. The period is one bit per 2 in one
/// tail period of z.
struct ParityAnalysis {
  Word2 transient;
  Word2 period;

  int digit(std::size_t k) const {
    if (k < transient.size()) return transient[k];
    if (period.empty()) throw ForcingError("parity analysis has an empty period");
    return period[(k - transient.size()) % period.size()];
  }
};

inline ParityAnalysis parity_tail_analysis(const EventualReal& z) {
  if (!z.in_H())
    throw ForcingError("real has only finitely many 2s (not in H)");
  // blocks starting at a 2 inside the periodic part repeat verbatim
  std::size_t in_prefix = z.prefix.count(2);
  std::size_t per_period = z.tail.count(2);
  ParityAnalysis out;
  for (std::size_t k = 0; k < in_prefix; ++k)
    out.transient.push_back(parity_digit(z, k));
  for (std::size_t j = 0; j < per_period; ++j)
    out.period.push_back(parity_digit(z, in_prefix + j));
  return out;
}

/// Parity code of a finite ternary word: one bit per completed inter-2
/// block, so the output length is max(0, #2s - 1). Monotone under word
/// extension.
inline Word2 parity_code(const Word3& t) {
  Word2 out;
  std::size_t prev = Word3::npos;
  int ones = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 2) {
      if (prev != Word3::npos) out.push_back(ones);
      prev = i;
      ones = 0;
    } else if (t[i] == 1 && prev != Word3::npos) {
      ones ^= 1;
    }
  }
  return out;
}

/// The finite prefix of z through its (i+1)-th 2 settles the first i coded
/// bits: parity_code of that prefix equals (parity_digit(z, 0..i-1)).
inline bool check_alignment(const EventualReal& z, std::size_t i) {
  if (!z.in_H())
    throw ForcingError("real has only finitely many 2s (not in H)");
  Word2 direct;
  for (std::size_t k = 0; k < i; ++k) direct.push_back(parity_digit(z, k));
  if (i == 0) return parity_code(Word3{}) == direct;
  std::size_t settled_at = two_position(z, i) + 1;
  Word3 w;
  for (std::size_t j = 0; j < settled_at; ++j) w.push_back(z.digit(j));
  return parity_code(w) == direct;
}

// ---------------------------------------------------------------------------
// steering the parity code along a condition

namespace detail {

/// Walks a node of q upward, closing one parity block per round: at the
/// first splitting level it picks the digit in {0,1} that makes the block
/// parity land on the target once the block is closed with a 2 at the next
/// available place (the following splitting level, or a forced 2). Forced
/// digits between are accounted for.
class CohenWalk {
 public:
  explicit CohenWalk(const TCondition& q) : q_(q), word_(q.stem) {
    std::size_t last2 = word_.find_last(2);
    has_two_ = last2 != Word3::npos;
    if (has_two_)
      for (std::size_t i = last2 + 1; i < word_.size(); ++i)
        parity_ ^= (word_[i] == 1);
  }

  const Word3& word() const { return word_; }
  bool has_two() const { return has_two_; }

  /// Extend through the first place a 2 can sit, preferring a forced 2 (it
  /// costs no choice and keeps later splitting levels free). Opens block
  /// bookkeeping without settling any coded bit.
  void place_free_two() {
    std::size_t forced_at = Word3::npos;
    for (std::size_t level = word_.size(), guard = scan_bound(); guard-- > 0;
         ++level) {
      if (q_.rule_at(level).is_fixed(2)) {
        forced_at = level;
        break;
      }
    }
    for (std::size_t guard = scan_bound(); guard-- > 0;) {
      std::size_t level = word_.size();
      const LevelRule& r = q_.rule_at(level);
      if (r.is_fixed(2) || (r.is_split() && forced_at == Word3::npos)) {
        word_.push_back(2);
        has_two_ = true;
        parity_ = 0;
        return;
      }
      word_.push_back(r.is_split() ? 0 : r.digit);
    }
    throw ForcingError("no place for a 2 within the scan bound");
  }

  /// Close exactly one block with the given parity bit. With clean_tail
  /// set, the closing 2 must not be followed by a forced 2 before the next
  /// splitting level (so a later restriction will not settle extra bits).
  void close_block(int bit, bool clean_tail) {
    // forced digits up to the first splitting level
    std::size_t split_at = Word3::npos;
    for (std::size_t guard = scan_bound(); guard-- > 0;) {
      const LevelRule& r = q_.rule_at(word_.size());
      if (r.is_split()) {
        split_at = word_.size();
        break;
      }
      if (r.is_fixed(2)) {
        if (parity_ != bit)
          throw ForcingError(
              "a forced 2 closes the block with the wrong parity");
        if (clean_tail && !clean_after(word_.size()))
          throw ForcingError(
              "the forced closing 2 is followed by further forced 2s");
        word_.push_back(2);
        parity_ = 0;
        return;
      }
      word_.push_back(r.digit);
      parity_ ^= (r.digit == 1);
    }
    if (split_at == Word3::npos)
      throw ForcingError("no splitting level within the scan bound");

    // find the closing position after the split
    int forced_ones = 0;
    std::size_t close_at = Word3::npos;
    std::size_t level = split_at + 1;
    for (std::size_t guard = scan_bound(); guard-- > 0; ++level) {
      const LevelRule& r = q_.rule_at(level);
      if (r.is_fixed(1)) {
        forced_ones ^= 1;
        continue;
      }
      if (r.is_fixed(0)) continue;
      bool usable = !clean_tail || clean_after(level);
      if (usable) {
        close_at = level;
        break;
      }
      if (r.is_fixed(2))
        throw ForcingError(
            "every way of closing the block runs into further forced 2s");
      // a dirty splitting level: pass through it with digit 0
    }
    if (close_at == Word3::npos)
      throw ForcingError("no closing position within the scan bound");

    int choice = parity_ ^ bit ^ forced_ones;
    word_.push_back(choice);
    parity_ ^= (choice == 1);
    for (std::size_t l = split_at + 1; l < close_at; ++l) {
      const LevelRule& r = q_.rule_at(l);
      int d = r.is_split() ? 0 : r.digit;
      word_.push_back(d);
      parity_ ^= (d == 1);
    }
    word_.push_back(2);
    parity_ = 0;
  }

 private:
  /// No forced 2 between this level and the next splitting level.
  bool clean_after(std::size_t level) const {
    for (std::size_t guard = scan_bound(); guard-- > 0;) {
      const LevelRule& r = q_.rule_at(++level);
      if (r.is_split()) return true;
      if (r.is_fixed(2)) return false;
    }
    throw ForcingError("no splitting level within the scan bound");
  }

  std::size_t scan_bound() const {
    return q_.schedule.table.size() + 4 * q_.schedule.period() +
           word_.size() + 8;
  }

  const TCondition& q_;
  Word3 word_;
  bool has_two_ = false;
  int parity_ = 0;
};

}  // namespace detail

/// A node of q extending its stem whose parity code extends the stem's
/// code by exactly the bits of s. Works block by block through pairs of
/// splitting levels; forced 1s inside blocks are absorbed into the choice.
inline Word3 realize_parity(const TCondition& q, const Word2& s) {
  if (s.empty()) return q.stem;
  detail::CohenWalk walk(q);
  if (!walk.has_two()) walk.place_free_two();
  for (std::size_t j = 0; j < s.size(); ++j)
    walk.close_block(s[j], /*clean_tail=*/false);
  return walk.word();
}

}  // namespace tfc
