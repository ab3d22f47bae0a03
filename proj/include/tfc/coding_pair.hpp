#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tfc/coding.hpp"
#include "tfc/condition.hpp"
#include "tfc/generate.hpp"
#include "tfc/hechler.hpp"
#include "tfc/word.hpp"

namespace tfc {

// The transfer machinery needs, per poset, a word coding, an alignment
// witness and a below-condition realizer:
//  (a) the word coding is monotone under extension (finitary continuity);
//  (b) prefixes up to the alignment level settle at least i coded bits;
//  (c) below any condition, any further target code is realized by a node
//      extending the stem.

template <class Cond, class Node, class Real>
struct CodingPair {
  std::string poset_kind;
  std::function<Word2(const Node&)> word_code;
  std::function<std::size_t(const Real&, std::size_t)> align_level;
  std::function<Node(const Cond&, const Word2&)> realize;
};

template <class Cond, class Node, class Real>
struct CodingPairHarness {
  std::function<Node(Rng&)> gen_node;
  std::function<Node(Rng&, const Node&)> gen_extension;
  std::function<Cond(Rng&)> gen_cond;
  std::function<Real(Rng&)> gen_real;
  std::function<Word2(Rng&)> gen_target;
  std::function<Node(const Real&, std::size_t)> real_prefix;
  std::function<Node(const Cond&)> stem_of;
  std::function<bool(const Cond&, const Node&)> member_of;
  std::function<bool(const Node&, const Node&)> extends;  // second >= first
};

struct CodingPairReport {
  long samples = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

/// Property check of the three laws on random samples; every failure is
/// reported with its sample index.
template <class Cond, class Node, class Real>
CodingPairReport check_coding_pair(const CodingPair<Cond, Node, Real>& cp,
                                   const CodingPairHarness<Cond, Node, Real>& h,
                                   long samples, std::uint64_t seed,
                                   std::size_t align_bits = 12) {
  CodingPairReport rep;
  rep.samples = samples;
  Rng rng(seed);
  auto fail = [&rep](long i, const std::string& what) {
    rep.counterexamples.push_back("sample " + std::to_string(i) + ": " + what);
  };
  for (long i = 0; i < samples; ++i) {
    // (a) monotone word coding
    Node t = h.gen_node(rng);
    Node t2 = h.gen_extension(rng, t);
    if (!cp.word_code(t2).has_prefix(cp.word_code(t)))
      fail(i, "word code not monotone under extension");

    // (b) alignment settles enough bits
    Real x = h.gen_real(rng);
    for (std::size_t bits = 0; bits <= align_bits; ++bits) {
      std::size_t level = cp.align_level(x, bits);
      if (cp.word_code(h.real_prefix(x, level)).size() < bits) {
        fail(i, "alignment level settles fewer than " + std::to_string(bits) +
                    " bits");
        break;
      }
    }

    // (c) realizer lands in the condition and extends the code exactly
    Cond q = h.gen_cond(rng);
    Word2 s = h.gen_target(rng);
    Node sigma = cp.realize(q, s);
    if (!h.member_of(q, sigma))
      fail(i, "realized node is not in the condition");
    else if (!h.extends(h.stem_of(q), sigma))
      fail(i, "realized node does not extend the stem");
    else if (cp.word_code(sigma) != cp.word_code(h.stem_of(q)).concat(s))
      fail(i, "realized node codes the wrong word");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// the two instances

using TreeCodingPair = CodingPair<TCondition, Word3, EventualReal>;
using TreeCodingHarness = CodingPairHarness<TCondition, Word3, EventualReal>;

/// Parity-block coding on the ternary tree poset: bits settle one per
/// completed inter-2 block, so the alignment level for i bits is just past
/// the (i+1)-th occurrence of 2.
inline TreeCodingPair tree_coding_pair() {
  TreeCodingPair cp;
  cp.poset_kind = "T";
  cp.word_code = [](const Word3& t) { return parity_code(t); };
  cp.align_level = [](const EventualReal& x, std::size_t i) {
    return two_position(x, i) + 1;
  };
  cp.realize = [](const TCondition& q, const Word2& s) {
    return realize_parity(q, s);
  };
  return cp;
}

inline TreeCodingHarness tree_coding_harness() {
  TreeCodingHarness h;
  h.gen_node = [](Rng& rng) { return gen_word3(rng, 8); };
  h.gen_extension = [](Rng& rng, const Word3& t) {
    Word3 e = t;
    int extra = rng.range(0, 6);
    for (int i = 0; i < extra; ++i) e.push_back(rng.below(3));
    return e;
  };
  h.gen_cond = [](Rng& rng) { return gen_condition(rng, /*strict=*/true); };
  h.gen_real = [](Rng& rng) { return gen_real_in_H(rng); };
  h.gen_target = [](Rng& rng) { return gen_word2(rng, 5); };
  h.real_prefix = [](const EventualReal& x, std::size_t len) {
    Word3 w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(x.digit(i));
    return w;
  };
  h.stem_of = [](const TCondition& q) { return q.stem; };
  h.member_of = [](const TCondition& q, const Word3& t) { return member(q, t); };
  h.extends = [](const Word3& a, const Word3& b) { return b.has_prefix(a); };
  return h;
}

using HechlerCodingPair = CodingPair<DCondition, NatWord, EventualNatSeq>;
using HechlerCodingHarness =
    CodingPairHarness<DCondition, NatWord, EventualNatSeq>;

/// Mod-2 coding on the dominating poset at omega: one bit per level, so
/// the alignment is the identity.
inline HechlerCodingPair hechler_coding_pair() {
  HechlerCodingPair cp;
  cp.poset_kind = "HechlerOmega";
  cp.word_code = [](const NatWord& t) { return mod2_code(t); };
  cp.align_level = [](const EventualNatSeq&, std::size_t i) { return i; };
  cp.realize = [](const DCondition& q, const Word2& s) {
    return realize_mod2(q, s);
  };
  return cp;
}

inline HechlerCodingHarness hechler_coding_harness() {
  HechlerCodingHarness h;
  h.gen_node = [](Rng& rng) {
    NatWord t;
    int len = rng.range(0, 6);
    for (int i = 0; i < len; ++i) t.push_back(rng.range(0, 9));
    return t;
  };
  h.gen_extension = [](Rng& rng, const NatWord& t) {
    NatWord e = t;
    int extra = rng.range(0, 4);
    for (int i = 0; i < extra; ++i) e.push_back(rng.range(0, 9));
    return e;
  };
  h.gen_cond = [](Rng& rng) { return gen_dcondition(rng); };
  h.gen_real = [](Rng& rng) { return gen_nat_seq(rng); };
  h.gen_target = [](Rng& rng) { return gen_word2(rng, 5); };
  h.real_prefix = [](const EventualNatSeq& x, std::size_t len) {
    NatWord w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(x.at(i));
    return w;
  };
  h.stem_of = [](const DCondition& q) { return q.stem; };
  h.member_of = [](const DCondition& q, const NatWord& t) {
    return d_member(q, t);
  };
  h.extends = [](const NatWord& a, const NatWord& b) {
    if (b.size() < a.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  };
  return h;
}

// ---------------------------------------------------------------------------
// law-breaking mutations, used to confirm the checker has teeth

enum class CodingPairMutation {
  truncated_code,      // drop the last coded bit
  shifted_alignment,   // report the level for one bit fewer
  flipped_realizer,    // realize the target with its last bit flipped
};

inline const char* mutation_name(CodingPairMutation m) {
  switch (m) {
    case CodingPairMutation::truncated_code: return "truncated-code";
    case CodingPairMutation::shifted_alignment: return "shifted-alignment";
    case CodingPairMutation::flipped_realizer: return "flipped-realizer";
  }
  return "?";
}

template <class Cond, class Node, class Real>
CodingPair<Cond, Node, Real> apply_mutation(CodingPair<Cond, Node, Real> cp,
                                            CodingPairMutation m) {
  switch (m) {
    case CodingPairMutation::truncated_code: {
      auto inner = cp.word_code;
      cp.word_code = [inner](const Node& t) {
        Word2 w = inner(t);
        return w.empty() ? w : w.prefix(w.size() - 1);
      };
      break;
    }
    case CodingPairMutation::shifted_alignment: {
      auto inner = cp.align_level;
      cp.align_level = [inner](const Real& x, std::size_t i) {
        return inner(x, i == 0 ? 0 : i - 1);
      };
      break;
    }
    case CodingPairMutation::flipped_realizer: {
      auto inner = cp.realize;
      cp.realize = [inner](const Cond& q, const Word2& s) {
        if (s.empty()) return inner(q, s);
        Word2 flipped = s.prefix(s.size() - 1);
        flipped.push_back(1 - s[s.size() - 1]);
        return inner(q, flipped);
      };
      break;
    }
  }
  return cp;
}

}  // namespace tfc
