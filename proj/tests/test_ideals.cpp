#include "catch_amalgamated.hpp"

#include "support.hpp"
#include "tfc/tfc.hpp"

using namespace tfc;
using namespace tfc::test;

TEST_CASE("membership in the digit-2 ban sets") {
  EventualReal zeros = real("", "0");
  EventualReal twos = real("", "2");
  for (std::size_t n = 0; n < 6; ++n) {
    REQUIRE(member_nn(zeros, n));
    REQUIRE_FALSE(member_nn(twos, n));
  }
  EventualReal z = real("202", "0");
  REQUIRE_FALSE(member_nn(z, 1));  // a 2 sits at position 2
  REQUIRE(member_nn(z, 3));
}

TEST_CASE("membership in the vanishing-parity sets") {
  REQUIRE(member_mn(real("", "2"), 0));
  REQUIRE(member_mn(real("", "2"), 4));
  // one 1 per block: every parity bit is 1
  for (std::size_t n = 0; n < 5; ++n)
    REQUIRE_FALSE(member_mn(real("", "12"), n));
  // not in H at all
  REQUIRE_FALSE(member_mn(real("222", "0"), 0));
  // transient "10", period "0": bad bit only at index 0
  EventualReal z = real("212", "2");
  REQUIRE(parity_tail_analysis(z).transient.str() == "10");
  REQUIRE(parity_tail_analysis(z).period.str() == "0");
  REQUIRE_FALSE(member_mn(z, 0));
  REQUIRE(member_mn(z, 1));
}

TEST_CASE("witness against the digit-2 ban") {
  TCondition p0 = antichain_condition(OddLevelPredicate{Word2{}, Word2::parse("0")});
  TCondition w = nn_witness(p0, 5);
  // the stem picks digit 2 at the first splitting level >= 5
  REQUIRE(w.stem.size() >= 6);
  bool has_late_2 = false;
  for (std::size_t i = 5; i < w.stem.size(); ++i)
    has_late_2 |= w.stem[i] == 2;
  REQUIRE(has_late_2);
  REQUIRE(leq(w, p0));

  Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    TCondition p = gen_condition(rng, i % 2 == 0);
    std::size_t n = static_cast<std::size_t>(rng.below(6));
    TCondition q = nn_witness(p, n);
    CAPTURE(i, n);
    REQUIRE(leq(q, p));
    for (int s = 0; s < 20; ++s) {
      EventualReal z = branch(q, gen_selector(rng, false));
      REQUIRE_FALSE(member_nn(z, n));
    }
  }
}

TEST_CASE("the all-zero-choice branch dodges every ban eventually") {
  EventualReal z = non2_branch(full_split(""));
  REQUIRE(member_nn(z, 0));

  TCondition p = full_split("22");
  EventualReal x = non2_branch(p);
  REQUIRE(member_nn(x, 2));
  REQUIRE_FALSE(member_nn(x, 1));

  Rng rng(42);
  for (int i = 0; i < 40; ++i) {
    TCondition q = gen_condition(rng, /*strict=*/true);
    EventualReal b = non2_branch(q);
    CAPTURE(i);
    REQUIRE(member_nn(b, q.stem.size()));
  }

  REQUIRE_THROWS_AS(non2_branch(cond("0", {"S", "F2"}, {"S"})), ForcingError);
}

TEST_CASE("witness against vanishing parity bits") {
  TCondition p = full_split("");
  TCondition q = mn_witness(p, 0);
  Word2 d = decided_prefix(q);
  REQUIRE_FALSE(d.empty());
  REQUIRE(d[d.size() - 1] == 1);
  REQUIRE(leq(q, p));

  Rng rng(4040);
  for (int i = 0; i < 40; ++i) {
    TCondition r = gen_condition(rng, /*strict=*/true);
    std::size_t n = static_cast<std::size_t>(rng.below(6));
    TCondition w = mn_witness(r, n);
    CAPTURE(i, n);
    REQUIRE(leq(w, r));
    Word2 dw = decided_prefix(w);
    REQUIRE(dw.size() >= n + 1);
    REQUIRE(dw[dw.size() - 1] == 1);
    for (int s = 0; s < 20; ++s) {
      EventualReal z = branch(w, gen_selector(rng, /*ensure_two=*/true));
      REQUIRE(z.in_H());
      REQUIRE_FALSE(member_mn(z, n));
    }
  }
}

TEST_CASE("a parity-flat branch exists below every strict condition") {
  EventualReal z = all_zero_branch(full_split(""));
  REQUIRE(z.in_H());
  REQUIRE(member_mn(z, 0));

  // forced 1s at every odd level must be absorbed in pairs
  TCondition odd = antichain_condition(OddLevelPredicate{Word2{}, Word2::parse("1")});
  EventualReal x = all_zero_branch(odd);
  REQUIRE(x.in_H());
  REQUIRE(member_mn(x, decided_prefix(odd).size()));

  Rng rng(888);
  for (int i = 0; i < 60; ++i) {
    TCondition p = gen_condition(rng, /*strict=*/true);
    EventualReal b = all_zero_branch(p);
    CAPTURE(i);
    REQUIRE(b.in_H());
    REQUIRE(member_mn(b, decided_prefix(p).size()));
    // and it really is a branch of p
    Word3 w;
    for (std::size_t d = 0; d < 40; ++d) {
      w.push_back(b.digit(d));
      REQUIRE(member(p, w));
    }
  }
}
