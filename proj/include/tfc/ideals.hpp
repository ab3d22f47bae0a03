#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tfc/coding.hpp"
#include "tfc/condition.hpp"
#include "tfc/error.hpp"
#include "tfc/forcing_ops.hpp"
#include "tfc/real.hpp"

namespace tfc {

// Two families of witness sets over eventually periodic reals. The first
// bans the digit 2 from position n on; the second asks the coded parity
// bits to vanish from index n on. Each single set can be dodged below any
// condition, while a branch below any condition lands in some member of
// the family — the finite content of the ideal-separation argument.

/// z has no digit 2 at any position >= n.
inline bool member_nn(const EventualReal& z, std::size_t n) {
  if (z.tail.count(2) > 0) return false;
  for (std::size_t i = n; i < z.prefix.size(); ++i)
    if (z.prefix[i] == 2) return false;
  return true;
}

/// z is in H and its parity bits vanish from index n on.
inline bool member_mn(const EventualReal& z, std::size_t n) {
  if (!z.in_H()) return false;
  ParityAnalysis a = parity_tail_analysis(z);
  for (std::size_t k = n; k < a.transient.size(); ++k)
    if (a.transient[k] != 0) return false;
  for (std::size_t j = 0; j < a.period.size(); ++j)
    if (a.period[j] != 0) return false;
  return true;
}

/// A refinement of p none of whose branches survives the n-th digit-2 ban:
/// the stem is pushed through a splitting level >= n choosing digit 2.
inline TCondition nn_witness(const TCondition& p, std::size_t n) {
  std::size_t level = first_split_at_or_after(p, n);
  Word3 node = p.stem;
  for (std::size_t l = p.stem.size(); l < level; ++l) {
    const LevelRule& r = p.rule_at(l);
    node.push_back(r.is_split() ? 0 : r.digit);
  }
  node.push_back(2);
  return restrict_to(p, node);
}

/// The branch of a strict condition that always picks 0 at splits: beyond
/// the stem it never shows a 2, so it lies in the |stem|-th banned set.
inline EventualReal non2_branch(const TCondition& p) {
  if (p.schedule.has_fixed2())
    throw ForcingError(
        "condition forces digit 2 above the stem; no 2-free branch exists");
  BranchSelector zeros;
  zeros.tail_choices.push_back(0);
  return branch(p, zeros);
}

/// A refinement of p whose decided prefix carries a 1 at some index >= n,
/// so no branch through it has vanishing parity bits from n on.
inline TCondition mn_witness(const TCondition& p, std::size_t n) {
  std::size_t settled = decided_prefix(p).size();
  Word2 sigma;
  for (std::size_t j = n; j > settled; --j) sigma.push_back(0);
  sigma.push_back(1);
  return extend_decided(p, sigma);
}

/// A branch of a strict condition in H whose parity bits vanish beyond the
/// decided prefix: blocks are closed greedily with target parity 0, one
/// block at a time, looking one splitting gap ahead to absorb forced 1s.
/// The walk becomes periodic once the schedule phase at a block boundary
/// repeats.
inline EventualReal all_zero_branch(const TCondition& p) {
  if (!validate(p, /*strict=*/true).valid)
    throw ForcingError("all-zero branch needs a valid strict condition");
  detail::CohenWalk walk(p);
  if (!walk.has_two()) walk.place_free_two();

  std::size_t table_end = p.stem.size() + p.schedule.table.size();
  std::size_t period = p.schedule.period();
  // phase of a block boundary -> position in the emitted word
  std::vector<std::optional<std::size_t>> seen(period);
  std::size_t cycle_from = 0, cycle_to = 0;
  std::size_t guard = table_end / 2 + 2 * period + 8;
  while (guard-- > 0) {
    walk.close_block(0, /*clean_tail=*/false);
    std::size_t pos = walk.word().size();
    if (pos < table_end) continue;
    std::size_t phase = (pos - table_end) % period;
    if (seen[phase]) {
      cycle_from = *seen[phase];
      cycle_to = pos;
      break;
    }
    seen[phase] = pos;
  }
  if (cycle_to == 0)
    throw ForcingError("block boundaries never realigned with the schedule");

  const std::string& digits = walk.word().str();
  EventualReal z;
  z.prefix = Word3::parse(digits.substr(0, cycle_from));
  z.tail = Word3::parse(digits.substr(cycle_from, cycle_to - cycle_from));
  return z;
}

}  // namespace tfc
