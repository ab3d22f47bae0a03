#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfc/coding.hpp"
#include "tfc/condition.hpp"
#include "tfc/error.hpp"

namespace tfc {

// ---------------------------------------------------------------------------
// decided binary prefix

/// The part of the coded binary real settled by p: the parity code of the
/// stem, extended by any bits forced by Fixed(2) rules before the first
/// splitting level. In canonical form that extension is empty, and for
/// strict conditions it is exactly the code of the stem.
inline Word2 decided_prefix(const TCondition& p) {
  Word2 out = parity_code(p.stem);
  bool has_two = p.stem.count(2) > 0;
  int parity = 0;
  if (has_two) {
    std::size_t last2 = p.stem.find_last(2);
    for (std::size_t i = last2 + 1; i < p.stem.size(); ++i)
      parity ^= (p.stem[i] == 1);
  }
  std::size_t bound = p.schedule.table.size() + p.schedule.period() + 1;
  for (std::size_t off = 0; off < bound; ++off) {
    const LevelRule& r = p.schedule.rule(off);
    if (r.is_split()) return out;
    if (r.is_fixed(2)) {
      if (has_two) out.push_back(parity);
      has_two = true;
      parity = 0;
    } else if (r.is_fixed(1) && has_two) {
      parity ^= 1;
    }
  }
  throw ForcingError("schedule has no splitting level");
}

/// Refines p so that the decided prefix extends by exactly the bits of
/// sigma: one block per bit, picking the digit in {0,1} at the first
/// splitting level and a 2 at the next closing position so the whole
/// inter-2 block (forced 1s included) gets the right parity.
inline TCondition extend_decided(const TCondition& p, const Word2& sigma) {
  if (sigma.empty()) return p;
  detail::CohenWalk walk(p);
  if (!walk.has_two()) walk.place_free_two();
  for (std::size_t j = 0; j < sigma.size(); ++j)
    walk.close_block(sigma[j], /*clean_tail=*/j + 1 == sigma.size());
  TCondition q = restrict_to(p, walk.word());
  if (decided_prefix(q) != decided_prefix(p).concat(sigma))
    throw ForcingError(
        "forced 2s in the schedule settle bits beyond the requested ones");
  return q;
}

// ---------------------------------------------------------------------------
// failure of pure decision

/// Two stem-lengthening refinements of q that settle the next undecided
/// bit with opposite values: below returns .q0 forces bit k = 0 and .q1
/// forces bit k = 1, where k = |decided_prefix(q)|. Their existence shows
/// no refinement keeping the stem of q can decide bit k.
struct DecisionPair {
  std::size_t k = 0;
  TCondition q0;
  TCondition q1;
};

inline DecisionPair refute_pure_decision(const TCondition& q) {
  if (!validate(q, /*strict=*/true).valid)
    throw ForcingError("pure-decision refutation needs a strict condition");
  DecisionPair out;
  out.k = decided_prefix(q).size();
  Word2 zero, one;
  zero.push_back(0);
  one.push_back(1);
  out.q0 = extend_decided(q, zero);
  out.q1 = extend_decided(q, one);
  return out;
}

// ---------------------------------------------------------------------------
// grafting and the amalgamation drivers

namespace detail {

/// Copy the donor's level behavior onto q strictly above the given level:
/// q's stem and rules through `level` are kept; above it, a level inside
/// the donor's stem forces the donor's stem digit and higher levels take
/// the donor's schedule rule. Requires |stem(donor)| >= level and a Split
/// in q at the stem level (canonical input).
inline TCondition graft_above(const TCondition& q, std::size_t level,
                              const TCondition& donor) {
  if (donor.stem.size() < level)
    throw ForcingError("donor stem does not reach the graft level");
  LevelSchedule s;
  std::size_t donor_horizon = donor.stem.size() + donor.schedule.table.size();
  for (std::size_t l = q.stem.size(); l < donor_horizon; ++l) {
    if (l <= level)
      s.table.push_back(q.rule_at(l));
    else if (l < donor.stem.size())
      s.table.push_back(LevelRule::Fixed(donor.stem[l]));
    else
      s.table.push_back(donor.schedule.table[l - donor.stem.size()]);
  }
  s.tail = donor.schedule.tail;
  return normalize(q.stem, std::move(s));
}

}  // namespace detail

/// One amalgamation step: with n_k the (k+1)-th splitting level of q and
/// the donor below the restriction of q to some node of length n_k + 1,
/// keeps q through level n_k + 1 and copies the donor's behavior strictly
/// above n_k. The result can leave the strict class (a copied stem digit 2
/// becomes a Fixed(2) rule); validate reports it.
inline TCondition graft_one(const TCondition& q, std::size_t k,
                            const TCondition& donor) {
  std::size_t n_k = splitting_levels(q, k + 1).back();
  if (donor.stem.size() < n_k + 1)
    throw ForcingError("donor stem shorter than the graft level");
  Word3 node = donor.stem.prefix(n_k + 1);
  if (!member(q, node) || !leq(donor, restrict_to(q, node)))
    throw ForcingError(
        "donor is not below the matching restriction of the host");
  return detail::graft_above(q, n_k, donor);
}

// ---------------------------------------------------------------------------
// dense-set callbacks

/// Executable stand-in for a dense set: refine returns a condition below
/// its input; the optional stem-preserving variant returns a refinement
/// with the prescribed stem, or nothing when no such member exists. The
/// drivers re-check every returned relation and throw OracleViolation on
/// a breach.
struct DenseOracle {
  std::string name;
  std::function<TCondition(const TCondition&)> refine;
  std::function<std::optional<TCondition>(const TCondition&, const Word3&)>
      refine_with_stem;
};

/// Built-in oracles for the CLI and the demos:
///  - identity: returns its input (stem variant: the restriction itself);
///  - next-split-0: extends the stem through the next splitting level
///    with digit 0 (stem variant: always gives up);
///  - stem-lengthener: extends the stem through the next splitting level
///    with digit 2 (stem variant: keeps the stem and demotes the second
///    splitting level to Fixed(0)).
inline DenseOracle builtin_oracle(std::string_view name) {
  DenseOracle d;
  d.name = std::string(name);
  if (name == "identity") {
    d.refine = [](const TCondition& r) { return r; };
    d.refine_with_stem = [](const TCondition& r,
                            const Word3& t) -> std::optional<TCondition> {
      return restrict_to(r, t);
    };
    return d;
  }
  if (name == "next-split-0") {
    d.refine = [](const TCondition& r) {
      Word3 t = r.stem;
      t.push_back(0);
      return restrict_to(r, t);
    };
    d.refine_with_stem = [](const TCondition&,
                            const Word3&) -> std::optional<TCondition> {
      return std::nullopt;
    };
    return d;
  }
  if (name == "stem-lengthener") {
    d.refine = [](const TCondition& r) {
      Word3 t = r.stem;
      t.push_back(2);
      return restrict_to(r, t);
    };
    d.refine_with_stem = [](const TCondition& r,
                            const Word3& t) -> std::optional<TCondition> {
      TCondition base = restrict_to(r, t);
      auto splits = splitting_levels(base, 2);
      LevelSchedule thinned = base.schedule.with_rule(
          splits[1] - base.stem.size(), LevelRule::Fixed(0));
      return TCondition{base.stem, std::move(thinned)};
    };
    return d;
  }
  throw ForcingError("unknown built-in oracle '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// finite Axiom A step

struct AxiomARefinement {
  TCondition q;
  std::vector<TCondition> witnesses;  // one per handled node, predense below q
  std::vector<Word3> nodes;           // the handled nodes of length n_k + 1
};

/// One full Axiom A round at index k: enumerates the 3^(k+1) nodes of p of
/// length n_k + 1, pulls each restriction through the oracle and grafts the
/// answer back, so the result keeps the first k+1 splitting levels of p and
/// every witness sits above its node: q restricted to nodes[j] is below
/// witnesses[j].
inline AxiomARefinement axiomA_refine(const TCondition& p, std::size_t k,
                                      const DenseOracle& d) {
  if (!d.refine) throw ForcingError("oracle has no refine callback");
  if (k + 1 > kMaxFanoutExponent)
    throw ForcingError("amalgamation over 3^" + std::to_string(k + 1) +
                       " nodes exceeds the enumeration guard");
  std::size_t n_k = splitting_levels(p, k + 1).back();
  AxiomARefinement out;
  out.nodes = nodes_at_depth(p, n_k + 1, /*limit=*/n_k + 1);
  out.q = p;
  for (const Word3& node : out.nodes) {
    TCondition restricted = restrict_to(out.q, node);
    TCondition refined = d.refine(restricted);
    if (!leq(refined, restricted))
      throw OracleViolation("oracle '" + d.name +
                            "' returned a condition not below its input");
    out.q = detail::graft_above(out.q, n_k, refined);
    out.witnesses.push_back(std::move(refined));
  }
  return out;
}

// ---------------------------------------------------------------------------
// finite quasi-pure-decision fusion

struct QuasiPureStep {
  std::size_t stage = 0;
  Word3 node;
  bool refined = false;                // whether the oracle produced a member
  std::optional<TCondition> witness;   // the stem-preserving refinement used
};

struct QuasiPureResult {
  TCondition q;
  std::vector<TCondition> stages;  // condition after each completed stage
  std::vector<QuasiPureStep> log;
};

/// Runs the first `stage_count` stages of the stem-preserving fusion: at
/// stage k every node t of the current condition at its (k+1)-th splitting
/// level is offered to the oracle; a returned member with stem t is grafted
/// in, fixing the first k+1 splitting levels. Each stage output is below
/// its predecessor in the k-th fusion ordering, and the final condition
/// restricted to a refined node stays below the recorded witness.
inline QuasiPureResult quasi_pure_refine(const TCondition& p,
                                         std::size_t stage_count,
                                         const DenseOracle& d) {
  if (!d.refine_with_stem)
    throw ForcingError("oracle has no stem-preserving callback");
  QuasiPureResult out;
  out.q = p;
  for (std::size_t k = 0; k < stage_count; ++k) {
    if (k > kMaxFanoutExponent)
      throw ForcingError("fusion stage over 3^" + std::to_string(k) +
                         " nodes exceeds the enumeration guard");
    std::size_t n_k = splitting_levels(out.q, k + 1).back();
    std::vector<Word3> nodes = nodes_at_depth(out.q, n_k, /*limit=*/n_k);
    for (const Word3& node : nodes) {
      auto answer = d.refine_with_stem(out.q, node);
      QuasiPureStep step{k, node, false, std::nullopt};
      if (answer) {
        if (answer->stem != node)
          throw OracleViolation("oracle '" + d.name +
                                "' returned a condition with the wrong stem");
        if (!leq(*answer, restrict_to(out.q, node)))
          throw OracleViolation("oracle '" + d.name +
                                "' returned a condition not below the "
                                "matching restriction");
        out.q = detail::graft_above(out.q, n_k, *answer);
        step.refined = true;
        step.witness = *answer;
      }
      out.log.push_back(std::move(step));
    }
    out.stages.push_back(out.q);
  }
  return out;
}

}  // namespace tfc
