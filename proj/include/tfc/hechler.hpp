#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "tfc/error.hpp"
#include "tfc/word.hpp"

namespace tfc {

/// Finite word over the naturals.
using NatWord = std::vector<long>;

/// Eventually constant function omega -> omega.
struct EventualFn {
  std::vector<long> table;
  long tail_value = 0;

  long at(std::size_t n) const {
    return n < table.size() ? table[n] : tail_value;
  }

  friend bool operator==(const EventualFn&, const EventualFn&) = default;
};

/// Eventually periodic element of omega^omega.
struct EventualNatSeq {
  NatWord prefix;
  NatWord tail;

  long at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    if (tail.empty())
      throw ForcingError("eventually periodic sequence has an empty tail");
    return tail[(i - prefix.size()) % tail.size()];
  }
};

/// Dominating-style condition at omega: the tree of words extending the
/// stem whose entries from the stem on sit at or above the floor.
struct DCondition {
  NatWord stem;
  EventualFn floor;

  friend bool operator==(const DCondition&, const DCondition&) = default;
};

inline bool d_member(const DCondition& p, const NatWord& t) {
  std::size_t overlap = std::min(t.size(), p.stem.size());
  for (std::size_t i = 0; i < overlap; ++i)
    if (t[i] != p.stem[i]) return false;
  for (std::size_t i = p.stem.size(); i < t.size(); ++i)
    if (t[i] < p.floor.at(i)) return false;
  return true;
}

/// q <= p: longer stem that is a node of p, and a floor that dominates
/// p's floor everywhere from the new stem on. Decided over the table
/// horizons plus the two tail constants.
inline bool d_leq(const DCondition& q, const DCondition& p) {
  if (q.stem.size() < p.stem.size()) return false;
  if (!d_member(p, q.stem)) return false;
  std::size_t horizon = std::max(q.floor.table.size(), p.floor.table.size());
  for (std::size_t n = q.stem.size(); n < horizon; ++n)
    if (q.floor.at(n) < p.floor.at(n)) return false;
  return q.floor.tail_value >= p.floor.tail_value;
}

/// Entry-wise mod-2 image of a word over the naturals.
inline Word2 mod2_code(const NatWord& t) {
  Word2 out;
  for (long v : t) out.push_back(static_cast<int>(v & 1));
  return out;
}

/// A node of q extending its stem whose mod-2 code extends the stem's code
/// by s: at each new level take the floor value or the floor value plus
/// one, whichever has the requested parity.
inline NatWord realize_mod2(const DCondition& q, const Word2& s) {
  NatWord node = q.stem;
  for (std::size_t j = 0; j < s.size(); ++j) {
    long v = q.floor.at(node.size());
    node.push_back((v & 1) == s[j] ? v : v + 1);
  }
  return node;
}

/// Brute-force enumeration of the nodes of p of length d with entries
/// capped, for the ordering oracle.
inline std::vector<NatWord> d_nodes_at_depth(const DCondition& p,
                                             std::size_t d, long value_cap) {
  if (d <= p.stem.size())
    return {NatWord(p.stem.begin(), p.stem.begin() + static_cast<std::ptrdiff_t>(d))};
  std::vector<NatWord> acc{p.stem};
  for (std::size_t level = p.stem.size(); level < d; ++level) {
    std::vector<NatWord> next;
    for (const NatWord& w : acc) {
      for (long v = p.floor.at(level); v <= value_cap; ++v) {
        NatWord e = w;
        e.push_back(v);
        next.push_back(std::move(e));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace tfc
